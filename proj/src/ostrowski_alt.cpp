#include "ostrowski/ostrowski_alt.hpp"

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

const Int& seq_digit(const std::vector<Int>& digits,
                     const std::vector<Int>& period, size_t k) {
    if (k <= digits.size()) return digits[k - 1];
    return period[(k - 1 - digits.size()) % period.size()];
}

void check_seed_range_exact(const Real& gamma, const Real& alpha) {
    if ((gamma + alpha).sign() <= 0 || (gamma - Real(1)).sign() >= 0)
        throw Error(ErrorCode::SeedOutOfRange, "ostrowski_alt", "alt_expand",
                    "the seed gamma must lie strictly inside (-alpha,1)");
}

void check_seed_range_interval(const AlphaContext& ctx, const Rational& g) {
    if (g >= 1)
        throw Error(ErrorCode::SeedOutOfRange, "ostrowski_alt", "alt_expand",
                    "the seed gamma must lie strictly inside (-alpha,1)");
    for (unsigned attempt = 0;; ++attempt) {
        auto a = ctx.theta_bounds(0);  // enclosure of alpha
        if (g + a.first > 0) return;
        if (g + a.second <= 0)
            throw Error(ErrorCode::SeedOutOfRange, "ostrowski_alt",
                        "alt_expand",
                        "the seed gamma must lie strictly inside (-alpha,1)");
        if (attempt >= kRefineBudget || !ctx.raise_level())
            throw Error(ErrorCode::PrecisionExhausted, "ostrowski_alt",
                        "alt_expand",
                        "cannot certify gamma > -alpha from the available "
                        "partial quotients");
    }
}

std::pair<AltDigits, AltTrace> expand_exact(const AlphaContext& ctx,
                                            const Real& gamma,
                                            size_t max_digits) {
    AltDigits out;
    AltTrace trace;
    out.intent = SeqIntent::Prefix;
    Real residual = gamma;
    if (residual.is_zero()) {
        out.intent = SeqIntent::Finite;
        return {std::move(out), std::move(trace)};
    }
    for (size_t k = 1; k <= max_digits; ++k) {
        Real th = ctx.theta(static_cast<long>(k) - 1);
        Int ak = ctx.a(k);
        Int c = (residual / th).ceil();
        if (c > ak) c = ak;
        residual = residual - Real(c) * th;

        if (c < 0 || c > ak)
            throw Error(ErrorCode::IdentityViolation, "ostrowski_alt",
                        "alt_expand",
                        "digit left the range [0, a_k] at index " +
                            std::to_string(k),
                        static_cast<long long>(k));
        if (c == 0 && k >= 2 && out.digits[k - 2] != ctx.a(k - 1))
            throw Error(ErrorCode::IdentityViolation, "ostrowski_alt",
                        "alt_expand",
                        "zero digit not preceded by a maximal digit",
                        static_cast<long long>(k));
        out.digits.push_back(std::move(c));
        trace.residuals.push_back(residual);
        trace.parities.push_back(parity(k));
        if (residual.is_zero()) {
            out.intent = SeqIntent::Finite;
            break;
        }
        // Residual interval invariant, strict while the iteration runs:
        // gamma_k in (-theta_{k-rho}, -theta_{k-1+rho}).
        int rho = parity(k);
        Real lo_ref = ctx.theta(static_cast<long>(k) - rho);
        Real hi_ref = ctx.theta(static_cast<long>(k) - 1 + rho);
        if ((residual + lo_ref).sign() <= 0 || (residual + hi_ref).sign() >= 0)
            throw Error(ErrorCode::IdentityViolation, "ostrowski_alt",
                        "alt_expand",
                        "residual escaped the parity interval at index " +
                            std::to_string(k),
                        static_cast<long long>(k));
    }
    return {std::move(out), std::move(trace)};
}

std::pair<AltDigits, AltTrace> expand_interval(const AlphaContext& ctx,
                                               const Real& gamma,
                                               size_t max_digits) {
    if (!gamma.is_rational())
        throw Error(ErrorCode::MixedFields, "ostrowski_alt", "alt_expand",
                    "interval mode accepts rational seeds only (alpha is "
                    "known only through its partial quotients)");
    const Rational seed = gamma.as_rational();
    check_seed_range_interval(ctx, seed);

    AltDigits out;
    AltTrace trace;
    out.intent = SeqIntent::Prefix;
    if (seed == 0) {
        out.intent = SeqIntent::Finite;
        return {std::move(out), std::move(trace)};
    }

    auto residual_bounds = [&](size_t upto) {
        RatPair r{seed, seed};
        for (size_t j = 1; j <= upto; ++j)
            r = rp_sub_scaled(r, out.digits[j - 1],
                              ctx.theta_bounds(static_cast<long>(j) - 1));
        return r;
    };

    for (size_t k = 1; k <= max_digits; ++k) {
        ctx.ensure_level(k + 4);
        Int ak = ctx.a(k);
        std::optional<Int> digit;
        for (unsigned attempt = 0; attempt <= kRefineBudget; ++attempt) {
            RatPair prev = residual_bounds(k - 1);
            RatPair th = ctx.theta_bounds(static_cast<long>(k) - 1);
            bool prev_nonzero = prev.first > 0 || prev.second < 0;
            bool th_definite = th.first > 0 || th.second < 0;
            if (prev_nonzero && th_definite) {
                Rational c1 = prev.first / th.first;
                Rational c2 = prev.first / th.second;
                Rational c3 = prev.second / th.first;
                Rational c4 = prev.second / th.second;
                Rational qlo = std::min(std::min(c1, c2), std::min(c3, c4));
                Rational qhi = std::max(std::max(c1, c2), std::max(c3, c4));
                Int nlo = rat_ceil(qlo);
                Int nhi = rat_ceil(qhi);
                if (nlo == nhi) {
                    digit = std::min(nlo, ak);
                    break;
                }
                if (nlo >= ak) {  // min{ceil, a_k} decided either way
                    digit = ak;
                    break;
                }
            }
            if (!ctx.raise_level())
                throw Error(ErrorCode::PrecisionExhausted, "ostrowski_alt",
                            "alt_expand",
                            "digit " + std::to_string(k) +
                                " cannot be certified from the available "
                                "partial quotients",
                            static_cast<long long>(k));
        }
        if (!digit)
            throw Error(ErrorCode::PrecisionExhausted, "ostrowski_alt",
                        "alt_expand",
                        "refinement budget exhausted at index " +
                            std::to_string(k),
                        static_cast<long long>(k));
        if (*digit < 0 || *digit > ak)
            throw Error(ErrorCode::IdentityViolation, "ostrowski_alt",
                        "alt_expand",
                        "certified digit left the admissible range",
                        static_cast<long long>(k));
        out.digits.push_back(*digit);
        trace.enclosures.push_back(residual_bounds(k));
        trace.parities.push_back(parity(k));
    }
    return {std::move(out), std::move(trace)};
}

}  // namespace

std::pair<AltDigits, AltTrace> alt_expand(const AlphaContext& ctx,
                                          const Real& gamma,
                                          size_t max_digits) {
    if (max_digits < 1)
        throw Error(ErrorCode::ParseError, "ostrowski_alt", "alt_expand",
                    "max_digits must be >= 1");
    if (!ctx.exact_mode()) return expand_interval(ctx, gamma, max_digits);
    check_seed_range_exact(gamma, ctx.alpha_exact());
    return expand_exact(ctx, gamma, max_digits);
}

std::pair<AltDigits, AltTrace> alt_expand_line(const AlphaContext& ctx,
                                               const Real& r,
                                               size_t max_digits) {
    Int f = r.floor();
    Real frac = r - Real(f);
    if (frac.is_zero()) {
        AltDigits out;
        out.c0 = -f;
        out.intent = SeqIntent::Finite;
        return {std::move(out), AltTrace{}};
    }
    auto [digits, trace] = alt_expand(ctx, frac, max_digits);
    digits.c0 = -f;
    if (!digits.digits.empty() && digits.digits.front() < 1)
        throw Error(ErrorCode::IdentityViolation, "ostrowski_alt",
                    "alt_expand_line",
                    "fractional seed must open with c_1 >= 1");
    return {std::move(digits), std::move(trace)};
}

Verdict alt_validate(const CFExpansion& cf, const AltDigits& digits,
                     Strictness strictness) {
    static const Int kZero{0};
    const size_t n = digits.digits.size();
    const bool periodic = digits.intent == SeqIntent::Periodic;
    if (periodic && digits.period.empty())
        throw Error(ErrorCode::ParseError, "ostrowski_alt", "alt_validate",
                    "periodic intent requires a nonempty period");

    auto inadmissible = [](const char* cond, std::optional<size_t> index) {
        return Verdict{Verdict::Kind::Inadmissible, cond, index};
    };

    auto c = [&](size_t k) -> const Int& {
        if (!periodic && k > n) return kZero;
        return seq_digit(digits.digits, digits.period, k);
    };

    size_t window = n;
    bool period_argument = false;
    size_t cycle = 0, start = 0;
    if (periodic) {
        if (cf.period) {
            start = std::max(n, cf.period->preperiod_length);
            cycle = std::lcm(digits.period.size(), cf.period->digits.size());
            cycle = std::lcm(cycle, static_cast<size_t>(2));
            window = start + 2 * cycle;
            period_argument = true;
        } else {
            window = n + 2 * digits.period.size();
        }
    }

    // Range and the zero rule. A zero digit is interior when some later
    // digit exists; for finite sequences the final pair is exempt by the
    // trailing-digit rule, for prefixes the last observed position is
    // undecidable and left unflagged.
    for (size_t k = 1; k <= window; ++k) {
        const Int& ck = c(k);
        if (ck < 0 || ck > cf.digit(k)) return inadmissible("range", k);
        // A zero digit must follow a maximal one, at interior positions:
        // final zeros are the trailing-digit rule's business, and the last
        // observed position of a prefix is undecidable.
        bool interior = periodic || k < n;
        if (k >= 2 && ck == 0 && interior && c(k - 1) != cf.digit(k - 1))
            return inadmissible("zero-rule", k - 1);
    }

    Verdict base{};
    if (digits.intent == SeqIntent::Finite) {
        if (n > 0 && digits.digits.back() == 0)
            return inadmissible("final", n);
    } else if (!period_argument) {
        base = Verdict{Verdict::Kind::AdmissibleSoFar, "", std::nullopt};
    } else {
        bool odd_ones = false, even_ones = false;
        for (size_t k = start + 1; k <= start + 2 * cycle; ++k)
            if (c(k) >= 1) (k % 2 == 1 ? odd_ones : even_ones) = true;
        if (!odd_ones || !even_ones)
            return inadmissible("inf-ones", std::nullopt);
    }

    if (strictness == Strictness::Definition) {
        AbsDigits as_abs;
        as_abs.digits = digits.digits;
        as_abs.intent = digits.intent;
        as_abs.period = digits.period;
        Verdict av = abs_validate(cf, as_abs);
        if (av.kind == Verdict::Kind::Inadmissible)
            return Verdict{Verdict::Kind::Inadmissible,
                           "alpha-" + av.condition, av.index};
        if (av.kind == Verdict::Kind::AdmissibleSoFar &&
            base.kind == Verdict::Kind::Admissible)
            base = av;
    }
    return base;
}

EvalResult alt_evaluate(const AlphaContext& ctx, const AltDigits& digits,
                        size_t depth) {
    if (depth < 1)
        throw Error(ErrorCode::ParseError, "ostrowski_alt", "alt_evaluate",
                    "depth must be >= 1");
    size_t want = digits.digits.size() + 2;
    if (auto avail = ctx.available_digits()) want = std::min(want, *avail);
    Verdict v = alt_validate(ctx.cf(want), digits, digits.strictness);
    if (v.kind == Verdict::Kind::Inadmissible)
        throw Error(ErrorCode::InadmissibleDigits, "ostrowski_alt",
                    "alt_evaluate",
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
        Real sum(-digits.c0);  // c0 * theta_{-1}
        for (size_t k = 1; k <= N; ++k)
            sum += Real(digit_at(k)) * ctx.theta(static_cast<long>(k) - 1);
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
    RatPair sum{Rational(-digits.c0), Rational(-digits.c0)};
    for (size_t k = 1; k <= N; ++k) {
        RatPair th = ctx.theta_bounds(static_cast<long>(k) - 1);
        const Int& ck = digit_at(k);
        sum = {sum.first + Rational(ck) * th.first,
               sum.second + Rational(ck) * th.second};
    }
    out.lo = sum.first;
    out.hi = sum.second;
    out.exact = false;
    RatPair t1 = ctx.theta_abs_bounds(static_cast<long>(N) - 1);
    RatPair t2 = ctx.theta_abs_bounds(static_cast<long>(N));
    out.tail = t1.second + t2.second;
    return out;
}

}  // namespace ostrowski
