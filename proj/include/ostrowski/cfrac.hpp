#pragma once

#include "ostrowski/errors.hpp"
#include "ostrowski/integer.hpp"
#include "ostrowski/interval.hpp"
#include "ostrowski/literal.hpp"
#include "ostrowski/real.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ostrowski {

struct CFPeriod {
    size_t preperiod_length = 0;
    std::vector<Int> digits;
};

// Continued fraction r = a0 + 1/(a1 + 1/(a2 + ...)), every a_k >= 1.
// `limit` is set exactly when the iteration reached a zero residual
// (rational input). Irrational inputs have `infinite` set; for quadratic
// inputs the eventual period is detected by exact recurrence of the
// complete quotients and recorded in `period`.
struct CFExpansion {
    Int a0;
    std::vector<Int> digits;  // a_1..a_N (computed prefix)
    std::optional<size_t> limit;
    bool infinite = false;
    std::optional<CFPeriod> period;

    // Partial quotient a_k, k >= 1, materialized from the period when the
    // prefix is too short. Throws DigitsExhausted past a finite expansion
    // or past the known prefix.
    const Int& digit(size_t k) const;
    // Largest k with a_k available; nullopt when unlimited.
    std::optional<size_t> available() const;

    static CFExpansion from_literal(const CFLiteral& lit);
};

CFExpansion cf_expand(const Real& r, size_t max_digits,
                      size_t period_search_cap = 10000);

// Shared lazy state for a fixed base alpha in (0,1)\Q: partial quotients,
// convergents (p_k, q_k) with the seeds q_{-1} = p_0 = 0, p_{-1} = q_0 = 1,
// and the coefficients theta_k = q_k*alpha - p_k. Extension is append-only
// and synchronized; computed prefixes never change.
//
// Exact mode: alpha is a quadratic irrational, every theta_k is an exact
// Real (computed by the recursion and checked against the definition).
// Interval mode: alpha is known only through a partial-quotient literal;
// theta_k is enclosed through the convergent interval of alpha.
class AlphaContext : public std::enable_shared_from_this<AlphaContext> {
public:
    static std::shared_ptr<AlphaContext> make(const AlphaSpec& spec,
                                              size_t period_search_cap = 10000);
    static std::shared_ptr<AlphaContext> make_exact(
        const Real& alpha, size_t period_search_cap = 10000);
    static std::shared_ptr<AlphaContext> make_interval(const CFLiteral& lit);

    bool exact_mode() const { return exact_.has_value(); }
    const Real& alpha_exact() const;
    std::optional<size_t> available_digits() const;

    // Snapshot of the CF of alpha (a0 = 0) with at least n digits when
    // available.
    CFExpansion cf(size_t n) const;

    Int a(size_t k) const;  // partial quotient, k >= 1
    Int p(long k) const;    // convergent numerator,  k >= -1
    Int q(long k) const;    // convergent denominator, k >= -1

    // Exact mode only.
    Real theta(long k) const;      // k >= -1
    Real theta_abs(long k) const;  // |theta_k|
    Real residual(size_t k) const;  // complete quotient alpha_k, k >= 0

    // Interval mode (usable in exact mode too; enclosures are then built
    // from the exact values).
    IntervalReal alpha_enclosure() const;
    IntervalReal theta_enclosure(long k) const;
    std::pair<Rational, Rational> theta_bounds(long k) const;
    std::pair<Rational, Rational> theta_abs_bounds(long k) const;

    // Convergent level backing interval enclosures; raising it tightens
    // every enclosure. Returns false when the digit supply is exhausted.
    size_t level() const;
    bool raise_level() const;
    void ensure_level(size_t m) const;

private:
    AlphaContext() = default;

    struct ExactState {
        Real alpha;
        std::deque<Real> residuals;  // alpha_0, alpha_1, ...
        std::map<Real, size_t> seen;  // residual -> index, for period detection
        size_t period_search_cap = 10000;
        std::optional<CFPeriod> period;
    };

    std::optional<ExactState> exact_;
    std::optional<CFLiteral> literal_;

    mutable std::mutex mu_;
    mutable std::deque<Int> digits_;  // a_1..a_m
    mutable std::deque<Int> ps_, qs_;  // p_k, q_k for k >= -1 (offset +1)
    mutable std::deque<Real> thetas_;  // exact mode, theta_k for k >= -1
    mutable size_t level_ = 0;

    void ensure_digits_locked(size_t n) const;
    void ensure_convergents_locked(long k) const;
    void ensure_thetas_locked(long k) const;
    const Int& digit_locked(size_t k) const;
    std::pair<Rational, Rational> alpha_bounds_locked() const;
    std::pair<Rational, Rational> theta_bounds_locked(long k) const;
    bool raise_level_locked() const;
};

// Convergent prefix (p_k, q_k) for k = -1..n.
struct Convergents {
    std::vector<Int> p, q;  // index i holds k = i - 1
    long max_index = -1;
};
Convergents convergents(const AlphaContext& ctx, size_t n);

// Theta prefix theta_{-1}..theta_n; `exact` in exact mode, certified
// `enclosures` in interval mode.
struct ThetaView {
    std::vector<Real> exact;
    std::vector<std::pair<Rational, Rational>> enclosures;
    long max_index = -1;
};
ThetaView theta_seq(const AlphaContext& ctx, size_t n);

struct IdentityCheck {
    std::string name;
    std::string closed_form;
    std::string partial_sum;
    std::string tail_bound;
    std::string discrepancy;
    bool pass = false;
};

struct IdentityReport {
    size_t depth_requested = 0;
    size_t depth_used = 0;
    bool interval_mode = false;
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

// Verifies the closed-form identities
//   sum a_k|theta_{k-1}| = 1 + alpha        sum a_k theta_{k-1} = 1 - alpha
//   sum a_{2k}|theta_{2k-1}| = alpha        sum a_{2k+1}|theta_{2k}| = 1
// and the telescoped tail  sum_{k>=n} a_k|theta_{k-1}| = |theta_{n-2}| +
// |theta_{n-1}|, each against its exact remaining mass. Violations throw
// IdentityViolation (they indicate an arithmetic bug, never a property of
// the input).
IdentityReport check_identities(const AlphaContext& ctx, size_t depth,
                                unsigned render_digits = 50);

}  // namespace ostrowski
