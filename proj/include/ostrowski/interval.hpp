#pragma once

#include "ostrowski/errors.hpp"
#include "ostrowski/integer.hpp"
#include "ostrowski/real.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <variant>

namespace ostrowski {

// Certified rational enclosure of a real value, with an on-demand refiner.
// Refinement never widens the enclosure; refine() returns false once the
// underlying precision source is exhausted (e.g. a finite CF digit list).
class IntervalReal {
public:
    // Refiner contract: improve lo/hi in place (never widen); return false
    // when no further improvement is possible.
    using Refiner = std::function<bool(Rational& lo, Rational& hi)>;

    IntervalReal(Rational lo, Rational hi, Refiner refiner = {});
    static IntervalReal exact(const Rational& v) { return {v, v, {}}; }
    static IntervalReal exact(const Real& v);

    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    // -1 / +1 when the enclosure is sign-definite, 0 when undecided.
    int sign_certain() const;

    // Strictly shrinks the enclosure or reports exhaustion.
    bool refine();

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    IntervalReal operator-() const;
    IntervalReal abs() const;

private:
    Rational lo_, hi_;
    Refiner refiner_;
};

// Quotient a/b. Refines b up to `budget` times until its sign is certain;
// throws PrecisionExhausted if the denominator cannot be separated from zero.
IntervalReal interval_div(IntervalReal a, IntervalReal b, unsigned budget = 64);

struct Undecided {};
using FloorResult = std::variant<Int, Undecided>;

// Floor of an enclosed value: the exact floor if the enclosure separates
// from the integers within `budget` refinements, Undecided otherwise.
// Never returns a wrong answer.
FloorResult interval_floor(IntervalReal x, unsigned budget);

FloorResult interval_ceil(IntervalReal x, unsigned budget);

}  // namespace ostrowski
