#include "ostrowski/interval.hpp"

#include <algorithm>
#include <utility>

namespace ostrowski {

IntervalReal::IntervalReal(Rational lo, Rational hi, Refiner refiner)
    : lo_(std::move(lo)), hi_(std::move(hi)), refiner_(std::move(refiner)) {
    if (lo_ > hi_)
        throw Error(ErrorCode::ParseError, "exactreal", "interval",
                    "inverted enclosure");
}

IntervalReal IntervalReal::exact(const Real& v) {
    if (v.is_rational()) return exact(v.as_rational());
    auto [lo, hi] = v.enclosure(40);
    return {lo, hi, {}};
}

int IntervalReal::sign_certain() const {
    if (lo_ > 0) return 1;
    if (hi_ < 0) return -1;
    return 0;
}

bool IntervalReal::refine() {
    if (!refiner_) return false;
    Rational old_width = width();
    Rational lo = lo_, hi = hi_;
    if (!refiner_(lo, hi)) {
        refiner_ = {};
        return false;
    }
    // Never widen; intersect with the previous enclosure.
    lo_ = std::max(lo_, lo);
    hi_ = std::min(hi_, hi);
    if (lo_ > hi_)
        throw Error(ErrorCode::IdentityViolation, "exactreal", "refine",
                    "refinement produced a disjoint enclosure");
    return width() < old_width;
}

namespace {

// Composite refiner over copies of the operands: refine whichever operand
// still can, then recompute the combined bounds.
template <typename Recompute>
IntervalReal::Refiner combine(IntervalReal a, IntervalReal b, Recompute rec) {
    auto state = std::make_shared<std::pair<IntervalReal, IntervalReal>>(
        std::move(a), std::move(b));
    return [state, rec](Rational& lo, Rational& hi) {
        bool ra = state->first.refine();
        bool rb = state->second.refine();
        if (!ra && !rb) return false;
        rec(state->first, state->second, lo, hi);
        return true;
    };
}

void add_bounds(const IntervalReal& a, const IntervalReal& b, Rational& lo,
                Rational& hi) {
    lo = a.lower() + b.lower();
    hi = a.upper() + b.upper();
}

void sub_bounds(const IntervalReal& a, const IntervalReal& b, Rational& lo,
                Rational& hi) {
    lo = a.lower() - b.upper();
    hi = a.upper() - b.lower();
}

void mul_bounds(const IntervalReal& a, const IntervalReal& b, Rational& lo,
                Rational& hi) {
    Rational c[4] = {a.lower() * b.lower(), a.lower() * b.upper(),
                     a.upper() * b.lower(), a.upper() * b.upper()};
    lo = *std::min_element(c, c + 4);
    hi = *std::max_element(c, c + 4);
}

}  // namespace

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    Rational lo, hi;
    add_bounds(a, b, lo, hi);
    return {lo, hi, combine(a, b, add_bounds)};
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    Rational lo, hi;
    sub_bounds(a, b, lo, hi);
    return {lo, hi, combine(a, b, sub_bounds)};
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    Rational lo, hi;
    mul_bounds(a, b, lo, hi);
    return {lo, hi, combine(a, b, mul_bounds)};
}

IntervalReal IntervalReal::operator-() const {
    IntervalReal self = *this;
    auto refiner = [self](Rational& lo, Rational& hi) mutable {
        if (!self.refine()) return false;
        lo = -self.upper();
        hi = -self.lower();
        return true;
    };
    return {-hi_, -lo_, refiner};
}

IntervalReal IntervalReal::abs() const {
    IntervalReal self = *this;
    auto bounds = [](const IntervalReal& x, Rational& lo, Rational& hi) {
        if (x.lower() >= 0) {
            lo = x.lower();
            hi = x.upper();
        } else if (x.upper() <= 0) {
            lo = -x.upper();
            hi = -x.lower();
        } else {
            lo = 0;
            hi = std::max(Rational(-x.lower()), x.upper());
        }
    };
    Rational lo, hi;
    bounds(*this, lo, hi);
    auto refiner = [self, bounds](Rational& lo, Rational& hi) mutable {
        if (!self.refine()) return false;
        bounds(self, lo, hi);
        return true;
    };
    return {lo, hi, refiner};
}

IntervalReal interval_div(IntervalReal a, IntervalReal b, unsigned budget) {
    for (unsigned i = 0; b.sign_certain() == 0; ++i) {
        if (i >= budget || !b.refine())
            throw Error(ErrorCode::PrecisionExhausted, "exactreal",
                        "interval_div",
                        "denominator enclosure straddles zero");
    }
    auto inv_bounds = [](const IntervalReal& x, Rational& lo, Rational& hi) {
        lo = Rational(1) / x.upper();
        hi = Rational(1) / x.lower();
    };
    Rational lo, hi;
    inv_bounds(b, lo, hi);
    IntervalReal bc = b;
    auto refiner = [bc, inv_bounds](Rational& lo, Rational& hi) mutable {
        if (!bc.refine()) return false;
        inv_bounds(bc, lo, hi);
        return true;
    };
    return a * IntervalReal(lo, hi, refiner);
}

FloorResult interval_floor(IntervalReal x, unsigned budget) {
    for (unsigned i = 0;; ++i) {
        Int n = rat_floor(x.lower());
        if (x.upper() < Rational(n + 1)) return n;
        if (i >= budget || !x.refine()) return Undecided{};
    }
}

FloorResult interval_ceil(IntervalReal x, unsigned budget) {
    FloorResult f = interval_floor(-x, budget);
    if (auto* n = std::get_if<Int>(&f)) return Int(-*n);
    return Undecided{};
}

}  // namespace ostrowski
