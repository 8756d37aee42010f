#pragma once

#include "ostrowski/errors.hpp"
#include "ostrowski/integer.hpp"
#include "ostrowski/real.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ostrowski {

// Partial-quotient literal: "cf:[a1,a2,...]" (finite known prefix of an
// otherwise unknown irrational) or "cf:[a1,...;b1,...]" (eventually
// periodic, hence a fully determined quadratic irrational). Every digit
// must be >= 1.
struct CFLiteral {
    std::vector<Int> preperiod;
    std::vector<Int> period;  // empty => plain finite digit list

    bool periodic() const { return !period.empty(); }
    // Digit a_k (1-based); throws DigitsExhausted for finite lists.
    const Int& digit(size_t k) const;
    // Number of known digits; nullopt when periodic (unlimited).
    std::optional<size_t> available() const;
};

using AlphaSpec = std::variant<Real, CFLiteral>;

// "rat:P/Q" | "rat:P" | "quad:(P+Q*sqrt(D))/R" | "cf:[...]" | "cf:[...;...]"
AlphaSpec parse_alpha_spec(const std::string& text);

// Seed literals are exact values only ("rat:..." or "quad:...").
Real parse_real_literal(const std::string& text);

// Digit-sequence literal for validators/evaluators: "[d1,d2,...]" or
// "[d1,...;p1,...]" with a periodic continuation; digits >= 0.
struct DigitLiteral {
    std::vector<Int> digits;
    std::vector<Int> period;
};
DigitLiteral parse_digit_literal(const std::string& text);

}  // namespace ostrowski
