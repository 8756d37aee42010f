#include "ostrowski/ostrowski_abs.hpp"

#include <algorithm>
#include <numeric>

namespace ostrowski {

namespace {

constexpr unsigned kRefineBudget = 1024;

using RatPair = std::pair<Rational, Rational>;

RatPair rp_sub_scaled(const RatPair& a, const Int& c, const RatPair& b) {
    // a - c*b with c >= 0
    return {a.first - Rational(c) * b.second, a.second - Rational(c) * b.first};
}

// Digit b_k of a possibly periodic sequence, 1-based.
const Int& seq_digit(const std::vector<Int>& digits,
                     const std::vector<Int>& period, size_t k) {
    if (k <= digits.size()) return digits[k - 1];
    return period[(k - 1 - digits.size()) % period.size()];
}

void check_seed_range(const Real& beta) {
    if (beta.sign() <= 0 || (beta - Real(1)).sign() >= 0)
        throw Error(ErrorCode::SeedOutOfRange, "ostrowski_abs", "abs_expand",
                    "the seed beta must lie strictly inside (0,1)");
}

std::pair<AbsDigits, AbsTrace> expand_exact(const AlphaContext& ctx,
                                            const Real& beta,
                                            size_t max_digits) {
    AbsDigits out;
    AbsTrace trace;
    out.intent = SeqIntent::Prefix;
    Real residual = beta;
    for (size_t k = 1; k <= max_digits; ++k) {
        if (residual.is_zero()) break;
        Real t = ctx.theta_abs(static_cast<long>(k) - 1);
        Int b = (residual / t).floor();
        residual = residual - Real(b) * t;
        // Post-hoc quotient/remainder law; failures mean an arithmetic bug.
        if (b < 0 || residual.sign() < 0 || (residual - t).sign() >= 0)
            throw Error(ErrorCode::IdentityViolation, "ostrowski_abs",
                        "abs_expand",
                        "division law violated at index " + std::to_string(k),
                        static_cast<long long>(k));
        if (b > ctx.a(k))
            throw Error(ErrorCode::IdentityViolation, "ostrowski_abs",
                        "abs_expand",
                        "digit exceeded a_k at index " + std::to_string(k),
                        static_cast<long long>(k));
        if (k > 1 && out.digits[k - 2] == ctx.a(k - 1) && b != 0)
            throw Error(ErrorCode::IdentityViolation, "ostrowski_abs",
                        "abs_expand",
                        "Markov condition (ii) violated by the expander",
                        static_cast<long long>(k));
        out.digits.push_back(std::move(b));
        trace.residuals.push_back(residual);
        if (residual.is_zero()) {
            out.intent = SeqIntent::Finite;
            break;
        }
    }
    return {std::move(out), std::move(trace)};
}

std::pair<AbsDigits, AbsTrace> expand_interval(const AlphaContext& ctx,
                                               const Real& beta,
                                               size_t max_digits) {
    if (!beta.is_rational())
        throw Error(ErrorCode::MixedFields, "ostrowski_abs", "abs_expand",
                    "interval mode accepts rational seeds only (alpha is "
                    "known only through its partial quotients)");
    AbsDigits out;
    AbsTrace trace;
    out.intent = SeqIntent::Prefix;
    const Rational seed = beta.as_rational();

    auto residual_bounds = [&](size_t upto) {
        RatPair r{seed, seed};
        for (size_t j = 1; j <= upto; ++j)
            r = rp_sub_scaled(r, out.digits[j - 1],
                              ctx.theta_abs_bounds(static_cast<long>(j) - 1));
        return r;
    };

    for (size_t k = 1; k <= max_digits; ++k) {
        ctx.ensure_level(k + 4);
        std::optional<Int> digit;
        for (unsigned attempt = 0; attempt <= kRefineBudget; ++attempt) {
            RatPair prev = residual_bounds(k - 1);
            RatPair th = ctx.theta_abs_bounds(static_cast<long>(k) - 1);
            if (prev.first > 0 && th.first > 0) {
                Rational qlo = prev.first / th.second;
                Rational qhi = prev.second / th.first;
                Int n = rat_floor(qlo);
                if (qhi < Rational(n + 1)) {
                    digit = n;
                    break;
                }
            }
            if (!ctx.raise_level())
                throw Error(ErrorCode::PrecisionExhausted, "ostrowski_abs",
                            "abs_expand",
                            "digit " + std::to_string(k) +
                                " cannot be certified from the available "
                                "partial quotients",
                            static_cast<long long>(k));
        }
        if (!digit)
            throw Error(ErrorCode::PrecisionExhausted, "ostrowski_abs",
                        "abs_expand",
                        "refinement budget exhausted at index " +
                            std::to_string(k),
                        static_cast<long long>(k));
        if (*digit < 0 || *digit > ctx.a(k))
            throw Error(ErrorCode::IdentityViolation, "ostrowski_abs",
                        "abs_expand",
                        "certified digit left the admissible range",
                        static_cast<long long>(k));
        out.digits.push_back(*digit);
        trace.enclosures.push_back(residual_bounds(k));
    }
    return {std::move(out), std::move(trace)};
}

}  // namespace

std::pair<AbsDigits, AbsTrace> abs_expand(const AlphaContext& ctx,
                                          const Real& beta,
                                          size_t max_digits) {
    if (max_digits < 1)
        throw Error(ErrorCode::ParseError, "ostrowski_abs", "abs_expand",
                    "max_digits must be >= 1");
    check_seed_range(beta);
    return ctx.exact_mode() ? expand_exact(ctx, beta, max_digits)
                            : expand_interval(ctx, beta, max_digits);
}

std::pair<AbsDigits, AbsTrace> abs_expand_line(const AlphaContext& ctx,
                                               const Real& r,
                                               size_t max_digits) {
    Int b0 = r.floor();
    Real frac = r - Real(b0);
    if (frac.is_zero()) {
        AbsDigits out;
        out.b0 = std::move(b0);
        out.intent = SeqIntent::Finite;
        return {std::move(out), AbsTrace{}};
    }
    auto [digits, trace] = abs_expand(ctx, frac, max_digits);
    digits.b0 = std::move(b0);
    return {std::move(digits), std::move(trace)};
}

Verdict abs_validate(const CFExpansion& cf, const AbsDigits& digits) {
    static const Int kZero{0};
    const size_t n = digits.digits.size();
    const bool periodic = digits.intent == SeqIntent::Periodic;
    if (periodic && digits.period.empty())
        throw Error(ErrorCode::ParseError, "ostrowski_abs", "abs_validate",
                    "periodic intent requires a nonempty period");

    auto inadmissible = [](const char* cond, std::optional<size_t> index) {
        return Verdict{Verdict::Kind::Inadmissible, cond, index};
    };

    // Window covering every digit constraint we can decide: the explicit
    // digits, plus two full combined cycles when both sides are periodic.
    size_t window = n;
    bool period_argument = false;
    if (periodic) {
        if (cf.period) {
            size_t start = std::max(n, cf.period->preperiod_length);
            size_t cycle =
                std::lcm(digits.period.size(), cf.period->digits.size());
            cycle = std::lcm(cycle, static_cast<size_t>(2));  // parity
            window = start + 2 * cycle;
            period_argument = true;
        } else {
            window = n + 2 * digits.period.size();
        }
    }

    auto b = [&](size_t k) -> const Int& {
        if (!periodic && k > n) return kZero;  // zero padding
        return seq_digit(digits.digits, digits.period, k);
    };

    bool any_nonzero = false;
    for (size_t k = 1; k <= window; ++k) {
        const Int& bk = b(k);
        if (bk != 0) any_nonzero = true;
        if (bk < 0 || bk > cf.digit(k)) return inadmissible("i", k);
        if (k > 1 && b(k - 1) == cf.digit(k - 1) && bk != 0)
            return inadmissible("ii", k - 1);
    }

    if (digits.intent == SeqIntent::Finite) {
        if (n > 0 && digits.digits.back() == 0) return inadmissible("final", n);
        // Zero padding satisfies (iii): a_k >= 1 so b_k = 0 <= a_k - 1.
        return Verdict{};
    }

    if (digits.intent == SeqIntent::Prefix || !period_argument)
        return Verdict{Verdict::Kind::AdmissibleSoFar, "", std::nullopt};

    if (!any_nonzero) return inadmissible("i", std::nullopt);

    // Period argument for (iii): scan one aligned stretch of two combined
    // cycles for odd and even slack.
    size_t start = std::max(n, cf.period->preperiod_length);
    size_t cycle = std::lcm(digits.period.size(), cf.period->digits.size());
    cycle = std::lcm(cycle, static_cast<size_t>(2));
    bool odd_slack = false, even_slack = false;
    for (size_t k = start + 1; k <= start + 2 * cycle; ++k) {
        if (b(k) <= cf.digit(k) - 1) (k % 2 == 1 ? odd_slack : even_slack) = true;
    }
    if (!odd_slack || !even_slack) return inadmissible("iii", std::nullopt);
    return Verdict{};
}

EvalResult abs_evaluate(const AlphaContext& ctx, const AbsDigits& digits,
                        size_t depth) {
    if (depth < 1)
        throw Error(ErrorCode::ParseError, "ostrowski_abs", "abs_evaluate",
                    "depth must be >= 1");
    size_t want = digits.digits.size() + 2;
    if (auto avail = ctx.available_digits()) want = std::min(want, *avail);
    Verdict v = abs_validate(ctx.cf(want), digits);
    if (v.kind == Verdict::Kind::Inadmissible)
        throw Error(ErrorCode::InadmissibleDigits, "ostrowski_abs",
                    "abs_evaluate",
                    "digit sequence violates condition (" + v.condition + ")" +
                        (v.index ? " at index " + std::to_string(*v.index)
                                 : ""),
                    v.index ? std::optional<long long>(*v.index)
                            : std::nullopt);

    EvalResult out;
    const bool periodic = digits.intent == SeqIntent::Periodic;
    size_t N = periodic ? depth : std::min(depth, digits.digits.size());
    out.depth_used = N;
    out.exact =
        digits.intent == SeqIntent::Finite && digits.digits.size() <= depth;

    auto digit_at = [&](size_t k) -> const Int& {
        return seq_digit(digits.digits, digits.period, k);
    };

    if (ctx.exact_mode()) {
        Real sum(digits.b0);
        for (size_t k = 1; k <= N; ++k)
            sum += Real(digit_at(k)) * ctx.theta_abs(static_cast<long>(k) - 1);
        auto [lo, hi] = sum.enclosure(60);
        out.value = sum;
        out.lo = lo;
        out.hi = hi;
        if (!out.exact) {
            Real tail = ctx.theta_abs(static_cast<long>(N) - 1) +
                        ctx.theta_abs(static_cast<long>(N));
            out.tail = tail.enclosure(60).second;
        }
        return out;
    }

    ctx.ensure_level(N + 3);
    RatPair sum{Rational(digits.b0), Rational(digits.b0)};
    for (size_t k = 1; k <= N; ++k) {
        RatPair th = ctx.theta_abs_bounds(static_cast<long>(k) - 1);
        const Int& bk = digit_at(k);
        sum = {sum.first + Rational(bk) * th.first,
               sum.second + Rational(bk) * th.second};
    }
    out.lo = sum.first;
    out.hi = sum.second;
    out.exact = false;  // interval mode never claims exactness
    RatPair t1 = ctx.theta_abs_bounds(static_cast<long>(N) - 1);
    RatPair t2 = ctx.theta_abs_bounds(static_cast<long>(N));
    out.tail = t1.second + t2.second;
    return out;
}

}  // namespace ostrowski
