#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ostrowski {

// Unbounded integers and rationals. Convergent denominators grow
// exponentially with depth, so fixed-width types are not an option.
// Expression templates are off so the operators return plain values.
using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int sign_of(const Int& n) { return n.sign(); }

// Floor division, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Integer square root: largest s with s*s <= n. Requires n >= 0.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (root) *root = s;
    return s * s == n;
}

inline Int rat_floor(const Rational& x) {
    return floor_div(boost::multiprecision::numerator(x),
                     boost::multiprecision::denominator(x));
}

inline Int rat_ceil(const Rational& x) { return -rat_floor(-x); }

inline std::string int_str(const Int& n) { return n.str(); }

// cpp_int's string constructor rejects an explicit leading '+'.
inline Int int_from_string(const std::string& s) {
    return Int(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

inline Rational rational_of(const Int& num, const Int& den) {
    return Rational(num, den);
}

}  // namespace ostrowski
