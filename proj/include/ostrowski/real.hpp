#pragma once

#include "ostrowski/errors.hpp"
#include "ostrowski/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace ostrowski {

// Exact element of Q or of a real quadratic field Q(sqrt(d)):
//
//     value = (p + q*sqrt(d)) / r
//
// Canonical form: r >= 1, gcd(p, q, r) = 1, and q = 0 <=> d = 0. When
// q != 0, d is positive and not a perfect square; square factors of d are
// removed by trial factorization up to square_free_bound() (larger square
// factors are kept, sign tests still decide comparisons correctly).
//
// All operations are exact. Sign, floor and ceiling are decided by integer
// sign tests and one squaring; no floating point is involved anywhere.
class Real {
public:
    Real() : p_(0), q_(0), d_(0), r_(1) {}
    Real(long long n) : p_(n), q_(0), d_(0), r_(1) {}
    explicit Real(Int n) : p_(std::move(n)), q_(0), d_(0), r_(1) {}

    // num/den, den != 0.
    static Real rational(Int num, Int den);
    // (p + q*sqrt(d))/r, r != 0, d >= 0 when q != 0.
    static Real quadratic(Int p, Int q, Int d, Int r);
    static Real sqrt_of(Int d) { return quadratic(0, 1, std::move(d), 1); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    Rational as_rational() const;  // requires is_rational()

    int sign() const;
    Real abs() const { return sign() < 0 ? -*this : *this; }

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);  // throws DivisionByZero
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }
    Real inverse() const { return Real(1) / *this; }

    friend bool operator==(const Real& a, const Real& b);
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Real& a, const Real& b);

    Int floor() const;
    Int ceil() const { return -((-*this).floor()); }
    Real frac() const { return *this - Real(floor()); }

    // Rational enclosure lo <= value <= hi with hi - lo <= 1/10^digits.
    std::pair<Rational, Rational> enclosure(unsigned digits = 30) const;

    // Fixed-point rendering, round toward zero.
    std::string decimal(unsigned digits = 50) const;
    // Literal form: "rat:P/Q" or "quad:(P+Q*sqrt(D))/R".
    std::string literal() const;

    friend std::ostream& operator<<(std::ostream& os, const Real& x);

    // Trial-factorization limit used when normalizing d square-free.
    static Int& square_free_bound();

private:
    Int p_, q_, d_, r_;

    struct raw_tag {};
    Real(raw_tag, Int p, Int q, Int d, Int r);

    void reduce_gcd();
    // sign of P + Q*sqrt(D), D not a perfect square when Q != 0
    static int sign3(const Int& P, const Int& Q, const Int& D);
    int compare_int(const Int& n) const;  // sign of (*this - n)
    static const Int& common_d(const Real& a, const Real& b, const char* op);
};

}  // namespace ostrowski
