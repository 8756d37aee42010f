#include "ostrowski/real.hpp"

#include <ostream>
#include <utility>

namespace ostrowski {

Int& Real::square_free_bound() {
    static Int bound(1000000);
    return bound;
}

Real::Real(raw_tag, Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (q_ == 0) d_ = 0;
    reduce_gcd();
}

void Real::reduce_gcd() {
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Real Real::rational(Int num, Int den) {
    if (den == 0)
        throw Error(ErrorCode::DivisionByZero, "exactreal", "rational",
                    "zero denominator");
    return Real(raw_tag{}, std::move(num), 0, 0, std::move(den));
}

Real Real::quadratic(Int p, Int q, Int d, Int r) {
    if (r == 0)
        throw Error(ErrorCode::DivisionByZero, "exactreal", "quadratic",
                    "zero denominator");
    if (q != 0 && d < 0)
        throw Error(ErrorCode::ParseError, "exactreal", "quadratic",
                    "negative radicand");
    if (q != 0) {
        Int root;
        if (is_perfect_square(d, &root)) {
            // sqrt(d) is an integer; fold into the rational part.
            p += q * root;
            q = 0;
            d = 0;
        } else {
            // Remove square factors j^2 <= d with j up to the configured bound.
            const Int& bound = square_free_bound();
            for (Int j = 2; j <= bound && j * j <= d; ++j) {
                Int jj = j * j;
                while (d % jj == 0) {
                    d /= jj;
                    q *= j;
                }
            }
        }
    }
    return Real(raw_tag{}, std::move(p), std::move(q), std::move(d),
                std::move(r));
}

Rational Real::as_rational() const {
    if (q_ != 0)
        throw Error(ErrorCode::ParseError, "exactreal", "as_rational",
                    "value is irrational");
    return Rational(p_, r_);
}

int Real::sign3(const Int& P, const Int& Q, const Int& D) {
    if (Q == 0) return sign_of(P);
    if (P == 0) return sign_of(Q);
    int sp = sign_of(P), sq = sign_of(Q);
    if (sp == sq) return sp;
    // Opposite signs: compare |P| against |Q|*sqrt(D) by squaring. Equality
    // is impossible since D is not a perfect square.
    Int pp = P * P;
    Int qqd = Q * Q * D;
    if (sp > 0) return pp > qqd ? 1 : -1;
    return qqd > pp ? 1 : -1;
}

int Real::sign() const { return sign3(p_, q_, d_); }

Real Real::operator-() const {
    Real out(*this);
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
}

const Int& Real::common_d(const Real& a, const Real& b, const char* op) {
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    if (a.d_ != b.d_)
        throw Error(ErrorCode::MixedFields, "exactreal", op,
                    "operands lie in different quadratic fields (d=" +
                        a.d_.str() + " vs d=" + b.d_.str() + ")");
    return a.d_;
}

Real operator+(const Real& a, const Real& b) {
    const Int& d = Real::common_d(a, b, "add");
    return Real(Real::raw_tag{}, a.p_ * b.r_ + b.p_ * a.r_,
                a.q_ * b.r_ + b.q_ * a.r_, d, a.r_ * b.r_);
}

Real operator-(const Real& a, const Real& b) {
    const Int& d = Real::common_d(a, b, "sub");
    return Real(Real::raw_tag{}, a.p_ * b.r_ - b.p_ * a.r_,
                a.q_ * b.r_ - b.q_ * a.r_, d, a.r_ * b.r_);
}

Real operator*(const Real& a, const Real& b) {
    const Int& d = Real::common_d(a, b, "mul");
    return Real(Real::raw_tag{}, a.p_ * b.p_ + a.q_ * b.q_ * d,
                a.p_ * b.q_ + a.q_ * b.p_, d, a.r_ * b.r_);
}

Real operator/(const Real& a, const Real& b) {
    if (b.sign() == 0)
        throw Error(ErrorCode::DivisionByZero, "exactreal", "div",
                    "division by zero");
    const Int& d = Real::common_d(a, b, "div");
    // 1/((p+q*sqrt(d))/r) = r*(p - q*sqrt(d)) / (p^2 - q^2 d), nonzero since
    // sqrt(d) is irrational whenever q != 0.
    Int norm = b.p_ * b.p_ - b.q_ * b.q_ * d;
    Real inv(Real::raw_tag{}, b.r_ * b.p_, -b.r_ * b.q_, d, std::move(norm));
    return a * inv;
}

bool operator==(const Real& a, const Real& b) {
    if (a.q_ == 0 || b.q_ == 0 || a.d_ == b.d_)
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
    // Different d with both irrational: decide through subtraction; this
    // throws MixedFields, matching the field-compatibility contract.
    return (a - b).sign() == 0;
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int Real::compare_int(const Int& n) const {
    return sign3(p_ - n * r_, q_, d_);
}

Int Real::floor() const {
    if (q_ == 0) return floor_div(p_, r_);
    // Bracket q*sqrt(d) within an interval of length one, then fix up with
    // exact sign tests.
    Int s = isqrt(q_ * q_ * d_);
    Int num_lo = q_ > 0 ? p_ + s : p_ - s - 1;
    Int n = floor_div(num_lo, r_);
    while (compare_int(n) < 0) --n;        // value < n
    while (compare_int(n + 1) >= 0) ++n;   // value >= n + 1
    return n;
}

std::pair<Rational, Rational> Real::enclosure(unsigned digits) const {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int t = (*this * Real(scale)).floor();
    return {Rational(t, scale), Rational(t + 1, scale)};
}

std::string Real::decimal(unsigned digits) const {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Real scaled = *this * Real(scale);
    Int t = sign() >= 0 ? scaled.floor() : scaled.ceil();  // truncate toward 0
    bool neg = t < 0;
    Int mag = neg ? Int(-t) : t;
    Int ip = mag / scale;
    Int fp = mag % scale;
    std::string out = neg ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        out += '.';
        out += std::string(digits - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string Real::literal() const {
    if (q_ == 0) return "rat:" + p_.str() + "/" + r_.str();
    std::string mid = q_ < 0 ? "-" : "+";
    Int qa = q_ < 0 ? Int(-q_) : q_;
    return "quad:(" + p_.str() + mid + qa.str() + "*sqrt(" + d_.str() + "))/" +
           r_.str();
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
    return os << x.literal();
}

}  // namespace ostrowski
