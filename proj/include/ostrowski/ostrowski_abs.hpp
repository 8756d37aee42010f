#pragma once

#include "ostrowski/cfrac.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ostrowski {

// Digit sequence of an absolute expansion beta = b0 + sum b_k |theta_{k-1}|.
//
// `Finite` means the residual reached exact zero, so the sequence is the
// whole expansion (l = digits.size()). `Prefix` is a truncated expansion
// with l undetermined (always the case in interval mode). `Periodic` marks
// validator inputs whose digits continue periodically forever.
enum class SeqIntent { Finite, Prefix, Periodic };

struct AbsDigits {
    Int b0{0};
    std::vector<Int> digits;  // b_1..b_N
    SeqIntent intent = SeqIntent::Finite;
    std::vector<Int> period;  // nonempty iff intent == Periodic

    bool terminated() const { return intent == SeqIntent::Finite; }
};

// Residuals beta_k aligned with the digits, for invariant auditing.
struct AbsTrace {
    std::vector<Real> residuals;  // exact mode
    std::vector<std::pair<Rational, Rational>> enclosures;  // interval mode
};

struct Verdict {
    enum class Kind { Admissible, AdmissibleSoFar, Inadmissible };
    Kind kind = Kind::Admissible;
    std::string condition;  // "i" | "ii" | "iii" | "final" when inadmissible
    std::optional<size_t> index;

    bool admissible() const { return kind == Kind::Admissible; }
};

// Greedy absolute expansion of beta in (0,1): b_k = floor(beta_{k-1} /
// |theta_{k-1}|). Exact mode terminates precisely when some residual is
// exactly zero; interval mode stops with PrecisionExhausted if a digit or
// the loop guard cannot be certified from the current enclosures.
std::pair<AbsDigits, AbsTrace> abs_expand(const AlphaContext& ctx,
                                          const Real& beta,
                                          size_t max_digits);

// Base-alpha expansion of an arbitrary real: b0 = floor(r), fractional part
// expanded by abs_expand; integers get the vacuous expansion l = 0.
std::pair<AbsDigits, AbsTrace> abs_expand_line(const AlphaContext& ctx,
                                               const Real& r,
                                               size_t max_digits);

// Markov conditions:
//   (i)  0 <= b_k <= a_k, not all zero
//   (ii) b_k = a_k implies b_{k+1} = 0
//   (iii) b_k <= a_k - 1 for infinitely many odd and even k
// Finite sequences are tested after zero padding and must end with a digit
// >= 1. Condition (iii) is decided exactly for periodic inputs (when the
// CF side is periodic too); plain prefixes get AdmissibleSoFar.
Verdict abs_validate(const CFExpansion& cf, const AbsDigits& digits);

struct EvalResult {
    bool exact = false;  // partial sum equals the represented value
    std::optional<Real> value;  // exact mode partial sum
    Rational lo, hi;     // certified enclosure of the partial sum
    Rational tail;       // upper bound on the remaining digit mass
    size_t depth_used = 0;
};

// Partial sum b0 + sum_{k<=N} b_k |theta_{k-1}| with the certified bound
// value in [S_N, S_N + |theta_{N-1}| + |theta_N|]; exact when the sequence
// is finite and N covers it. Throws InadmissibleDigits if validation fails.
EvalResult abs_evaluate(const AlphaContext& ctx, const AbsDigits& digits,
                        size_t depth);

}  // namespace ostrowski
