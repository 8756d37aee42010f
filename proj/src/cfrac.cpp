#include "ostrowski/cfrac.hpp"

#include <algorithm>
#include <utility>

namespace ostrowski {

const Int& CFExpansion::digit(size_t k) const {
    if (k == 0)
        throw Error(ErrorCode::ParseError, "cfrac", "digit",
                    "partial quotients are 1-based");
    if (k <= digits.size()) return digits[k - 1];
    if (period && k > period->preperiod_length) {
        size_t len = period->digits.size();
        return period->digits[(k - 1 - period->preperiod_length) % len];
    }
    throw Error(ErrorCode::DigitsExhausted, "cfrac", "digit",
                limit ? "continued fraction is finite with l = " +
                            std::to_string(*limit)
                      : "continued fraction prefix exhausted at index " +
                            std::to_string(k),
                static_cast<long long>(k));
}

std::optional<size_t> CFExpansion::available() const {
    if (period) return std::nullopt;
    return digits.size();
}

CFExpansion CFExpansion::from_literal(const CFLiteral& lit) {
    CFExpansion out;
    out.a0 = 0;
    out.digits = lit.preperiod;
    if (lit.periodic()) {
        out.period = CFPeriod{lit.preperiod.size(), lit.period};
        out.infinite = true;
    }
    return out;
}

CFExpansion cf_expand(const Real& r, size_t max_digits,
                      size_t period_search_cap) {
    if (max_digits < 1)
        throw Error(ErrorCode::ParseError, "cfrac", "cf_expand",
                    "max_digits must be >= 1");
    CFExpansion out;
    out.a0 = r.floor();
    Real alpha = r - Real(out.a0);
    out.infinite = !alpha.is_rational();
    if (alpha.is_zero()) {
        out.limit = 0;
        return out;
    }

    std::vector<Int> hist;
    std::map<Real, size_t> seen;
    std::optional<CFPeriod> period;
    if (out.infinite) seen.emplace(alpha, 0);

    while (!alpha.is_zero()) {
        if (out.infinite) {
            if (period) break;
            if (hist.size() >= max_digits && hist.size() >= period_search_cap)
                break;
        } else if (hist.size() >= max_digits) {
            break;
        }
        Real inv = Real(1) / alpha;
        Int a = inv.floor();
        alpha = inv - Real(a);
        hist.push_back(a);
        if (out.infinite && !period && !alpha.is_zero() &&
            hist.size() <= period_search_cap) {
            auto [it, fresh] = seen.emplace(alpha, hist.size());
            if (!fresh) {
                CFPeriod per;
                per.preperiod_length = it->second;
                per.digits.assign(hist.begin() + it->second, hist.end());
                period = std::move(per);
            }
        }
    }

    if (alpha.is_zero()) out.limit = hist.size();
    out.period = period;
    size_t n = std::min(max_digits, hist.size());
    out.digits.assign(hist.begin(), hist.begin() + n);
    if (period) {
        size_t pre = period->preperiod_length, len = period->digits.size();
        while (out.digits.size() < max_digits)
            out.digits.push_back(
                period->digits[(out.digits.size() - pre) % len]);
    }
    return out;
}

std::shared_ptr<AlphaContext> AlphaContext::make(const AlphaSpec& spec,
                                                 size_t period_search_cap) {
    if (const Real* x = std::get_if<Real>(&spec))
        return make_exact(*x, period_search_cap);
    return make_interval(std::get<CFLiteral>(spec));
}

std::shared_ptr<AlphaContext> AlphaContext::make_exact(
    const Real& alpha, size_t period_search_cap) {
    if (alpha.is_rational())
        throw Error(ErrorCode::RationalBase, "cfrac", "AlphaContext",
                    "the base alpha must be irrational");
    if (alpha.sign() <= 0 || (alpha - Real(1)).sign() >= 0)
        throw Error(ErrorCode::AlphaOutOfRange, "cfrac", "AlphaContext",
                    "the base alpha must lie strictly inside (0,1)");
    auto ctx = std::shared_ptr<AlphaContext>(new AlphaContext());
    ExactState st;
    st.alpha = alpha;
    st.period_search_cap = period_search_cap;
    st.residuals.push_back(alpha);
    st.seen.emplace(alpha, 0);
    ctx->exact_ = std::move(st);
    ctx->ps_ = {Int(1), Int(0)};  // p_{-1}, p_0
    ctx->qs_ = {Int(0), Int(1)};  // q_{-1}, q_0
    ctx->thetas_ = {Real(-1), alpha};
    ctx->level_ = 40;  // enclosure rendering precision, in decimal digits
    return ctx;
}

std::shared_ptr<AlphaContext> AlphaContext::make_interval(
    const CFLiteral& lit) {
    auto ctx = std::shared_ptr<AlphaContext>(new AlphaContext());
    ctx->literal_ = lit;
    ctx->ps_ = {Int(1), Int(0)};
    ctx->qs_ = {Int(0), Int(1)};
    {
        std::lock_guard<std::mutex> lock(ctx->mu_);
        ctx->ensure_convergents_locked(1);
        ctx->level_ = 1;
    }
    return ctx;
}

const Real& AlphaContext::alpha_exact() const {
    if (!exact_)
        throw Error(ErrorCode::PrecisionExhausted, "cfrac", "alpha_exact",
                    "alpha is only known through its partial quotients");
    return exact_->alpha;
}

std::optional<size_t> AlphaContext::available_digits() const {
    if (literal_) return literal_->available();
    return std::nullopt;
}

void AlphaContext::ensure_digits_locked(size_t n) const {
    if (literal_) return;  // literal digits are never materialized here
    auto& st = const_cast<ExactState&>(*exact_);
    while (digits_.size() < n && !st.period) {
        const Real& cur = st.residuals.back();
        Real inv = Real(1) / cur;
        Int a = inv.floor();
        Real next = inv - Real(a);
        digits_.push_back(a);
        if (st.residuals.size() <= st.period_search_cap) {
            auto [it, fresh] = st.seen.emplace(next, st.residuals.size());
            if (!fresh) {
                CFPeriod per;
                per.preperiod_length = it->second;
                per.digits.assign(digits_.begin() + it->second, digits_.end());
                st.period = std::move(per);
            }
        }
        st.residuals.push_back(next);
    }
}

const Int& AlphaContext::digit_locked(size_t k) const {
    if (k == 0)
        throw Error(ErrorCode::ParseError, "cfrac", "a",
                    "partial quotients are 1-based");
    if (literal_) return literal_->digit(k);
    if (k > digits_.size()) ensure_digits_locked(k);
    if (k <= digits_.size()) return digits_[k - 1];
    const CFPeriod& per = *exact_->period;
    return per.digits[(k - 1 - per.preperiod_length) % per.digits.size()];
}

Int AlphaContext::a(size_t k) const {
    std::lock_guard<std::mutex> lock(mu_);
    return digit_locked(k);
}

void AlphaContext::ensure_convergents_locked(long k) const {
    // ps_[i] holds p_{i-1}; seeds occupy i = 0, 1.
    for (long j = static_cast<long>(ps_.size()) - 1; j <= k; ++j) {
        const Int& aj = digit_locked(static_cast<size_t>(j));
        Int pj = aj * ps_[j] + ps_[j - 1];
        Int qj = aj * qs_[j] + qs_[j - 1];
        // Arithmetic self-check: p_j q_{j-1} - p_{j-1} q_j = (-1)^{j+1}.
        Int det = pj * qs_[j] - ps_[j] * qj;
        if (det != (j % 2 == 0 ? Int(-1) : Int(1)))
            throw Error(ErrorCode::IdentityViolation, "cfrac", "convergents",
                        "determinant identity failed at index " +
                            std::to_string(j));
        if (j >= 2 && qj <= qs_[j])
            throw Error(ErrorCode::IdentityViolation, "cfrac", "convergents",
                        "q_k failed to increase at index " + std::to_string(j));
        ps_.push_back(std::move(pj));
        qs_.push_back(std::move(qj));
    }
}

Int AlphaContext::p(long k) const {
    if (k < -1)
        throw Error(ErrorCode::ParseError, "cfrac", "convergents",
                    "index must be >= -1");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_convergents_locked(k);
    return ps_[k + 1];
}

Int AlphaContext::q(long k) const {
    if (k < -1)
        throw Error(ErrorCode::ParseError, "cfrac", "convergents",
                    "index must be >= -1");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_convergents_locked(k);
    return qs_[k + 1];
}

void AlphaContext::ensure_thetas_locked(long k) const {
    ensure_convergents_locked(k);
    const Real& alpha = exact_->alpha;
    for (long j = static_cast<long>(thetas_.size()) - 1; j <= k; ++j) {
        const Int& aj = digit_locked(static_cast<size_t>(j));
        Real th = thetas_[j - 1] + Real(aj) * thetas_[j];
        // theta_k must equal q_k*alpha - p_k and alternate in sign.
        Real by_def = Real(qs_[j + 1]) * alpha - Real(ps_[j + 1]);
        if (th != by_def)
            throw Error(ErrorCode::IdentityViolation, "cfrac", "theta_seq",
                        "recursion and definition disagree at index " +
                            std::to_string(j));
        if (th.sign() != (j % 2 == 0 ? 1 : -1))
            throw Error(ErrorCode::IdentityViolation, "cfrac", "theta_seq",
                        "sign alternation failed at index " +
                            std::to_string(j));
        thetas_.push_back(std::move(th));
    }
}

Real AlphaContext::theta(long k) const {
    if (k < -1)
        throw Error(ErrorCode::ParseError, "cfrac", "theta_seq",
                    "index must be >= -1");
    if (!exact_)
        throw Error(ErrorCode::PrecisionExhausted, "cfrac", "theta_seq",
                    "exact theta requested in interval mode");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_thetas_locked(k);
    return thetas_[k + 1];
}

Real AlphaContext::theta_abs(long k) const {
    Real th = theta(k);
    return k % 2 == 0 ? th : -th;
}

Real AlphaContext::residual(size_t k) const {
    if (!exact_)
        throw Error(ErrorCode::PrecisionExhausted, "cfrac", "residual",
                    "complete quotients unavailable in interval mode");
    std::lock_guard<std::mutex> lock(mu_);
    if (k >= exact_->residuals.size()) ensure_digits_locked(k + 1);
    const auto& st = *exact_;
    if (k < st.residuals.size()) return st.residuals[k];
    const CFPeriod& per = *st.period;
    return st.residuals[per.preperiod_length +
                        (k - per.preperiod_length) % per.digits.size()];
}

size_t AlphaContext::level() const {
    std::lock_guard<std::mutex> lock(mu_);
    return level_;
}

bool AlphaContext::raise_level_locked() const {
    if (exact_) {
        level_ += 40;
        return true;
    }
    size_t next = level_ + 1;
    if (auto avail = literal_->available(); avail && next > *avail)
        return false;
    ensure_convergents_locked(static_cast<long>(next));
    level_ = next;
    return true;
}

bool AlphaContext::raise_level() const {
    std::lock_guard<std::mutex> lock(mu_);
    return raise_level_locked();
}

void AlphaContext::ensure_level(size_t m) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (level_ < m && raise_level_locked()) {
    }
}

std::pair<Rational, Rational> AlphaContext::alpha_bounds_locked() const {
    if (exact_) {
        auto [lo, hi] = exact_->alpha.enclosure(static_cast<unsigned>(level_));
        return {lo, hi};
    }
    // alpha lies strictly between p_m/q_m and (p_m+p_{m-1})/(q_m+q_{m-1}).
    size_t m = level_;
    ensure_convergents_locked(static_cast<long>(m));
    Rational a(ps_[m + 1], qs_[m + 1]);
    Rational b(ps_[m + 1] + ps_[m], qs_[m + 1] + qs_[m]);
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::pair<Rational, Rational> AlphaContext::theta_bounds_locked(long k) const {
    if (k == -1) return {Rational(-1), Rational(-1)};
    if (exact_) {
        ensure_thetas_locked(k);
        return thetas_[k + 1].enclosure(static_cast<unsigned>(level_));
    }
    ensure_convergents_locked(k);
    auto [alo, ahi] = alpha_bounds_locked();
    const Int& qk = qs_[k + 1];
    const Int& pk = ps_[k + 1];
    Rational lo = Rational(qk) * alo - Rational(pk);
    Rational hi = Rational(qk) * ahi - Rational(pk);
    // Certify through the sign alternation and |theta_k| < 1/q_k.
    Rational mag(1, qk);
    if (k % 2 == 0) {
        lo = std::max(lo, Rational(0));
        hi = std::min(hi, mag);
    } else {
        lo = std::max(lo, -mag);
        hi = std::min(hi, Rational(0));
    }
    if (lo > hi)
        throw Error(ErrorCode::IdentityViolation, "cfrac", "theta_seq",
                    "theta enclosure is empty at index " + std::to_string(k));
    return {lo, hi};
}

std::pair<Rational, Rational> AlphaContext::theta_bounds(long k) const {
    if (k < -1)
        throw Error(ErrorCode::ParseError, "cfrac", "theta_seq",
                    "index must be >= -1");
    std::lock_guard<std::mutex> lock(mu_);
    if (!exact_) {
        size_t want = static_cast<size_t>(k + 2);
        if (auto avail = literal_->available())
            want = std::min(want, *avail);
        while (level_ < want && raise_level_locked()) {
        }
    }
    return theta_bounds_locked(k);
}

std::pair<Rational, Rational> AlphaContext::theta_abs_bounds(long k) const {
    auto [lo, hi] = theta_bounds(k);
    if (k % 2 == 0 && k >= 0) return {lo, hi};
    return {-hi, -lo};
}

IntervalReal AlphaContext::alpha_enclosure() const {
    std::pair<Rational, Rational> b;
    {
        std::lock_guard<std::mutex> lock(mu_);
        b = alpha_bounds_locked();
    }
    auto self = shared_from_this();
    return IntervalReal(b.first, b.second,
                        [self](Rational& lo, Rational& hi) {
                            if (!self->raise_level()) return false;
                            std::lock_guard<std::mutex> lock(self->mu_);
                            std::tie(lo, hi) = self->alpha_bounds_locked();
                            return true;
                        });
}

IntervalReal AlphaContext::theta_enclosure(long k) const {
    auto b = theta_bounds(k);
    auto self = shared_from_this();
    return IntervalReal(b.first, b.second,
                        [self, k](Rational& lo, Rational& hi) {
                            if (!self->raise_level()) return false;
                            std::tie(lo, hi) = self->theta_bounds(k);
                            return true;
                        });
}

CFExpansion AlphaContext::cf(size_t n) const {
    CFExpansion out;
    out.a0 = 0;
    out.infinite = true;
    std::lock_guard<std::mutex> lock(mu_);
    if (literal_) {
        size_t m = literal_->periodic()
                       ? n
                       : std::min(n, literal_->preperiod.size());
        for (size_t k = 1; k <= m; ++k) out.digits.push_back(literal_->digit(k));
        if (literal_->periodic())
            out.period = CFPeriod{literal_->preperiod.size(), literal_->period};
        else
            out.infinite = false;
        return out;
    }
    ensure_digits_locked(n);
    for (size_t k = 1; k <= n; ++k) out.digits.push_back(digit_locked(k));
    out.period = exact_->period;
    return out;
}

Convergents convergents(const AlphaContext& ctx, size_t n) {
    Convergents out;
    out.max_index = static_cast<long>(n);
    for (long k = -1; k <= static_cast<long>(n); ++k) {
        out.p.push_back(ctx.p(k));
        out.q.push_back(ctx.q(k));
    }
    return out;
}

ThetaView theta_seq(const AlphaContext& ctx, size_t n) {
    ThetaView out;
    out.max_index = static_cast<long>(n);
    if (ctx.exact_mode()) {
        for (long k = -1; k <= static_cast<long>(n); ++k)
            out.exact.push_back(ctx.theta(k));
    } else {
        for (long k = -1; k <= static_cast<long>(n); ++k)
            out.enclosures.push_back(ctx.theta_bounds(k));
    }
    return out;
}

namespace {

using RatPair = std::pair<Rational, Rational>;

RatPair rp_add(const RatPair& a, const RatPair& b) {
    return {a.first + b.first, a.second + b.second};
}
RatPair rp_sub(const RatPair& a, const RatPair& b) {
    return {a.first - b.second, a.second - b.first};
}
RatPair rp_scale(const Int& c, const RatPair& a) {
    // c >= 0 in every use below
    return {Rational(c) * a.first, Rational(c) * a.second};
}
RatPair rp_neg(const RatPair& a) { return {-a.second, -a.first}; }
RatPair rp_abs(const RatPair& a) {
    if (a.first >= 0) return a;
    if (a.second <= 0) return rp_neg(a);
    return {Rational(0), std::max(Rational(-a.first), a.second)};
}
bool rp_contains_zero(const RatPair& a) {
    return a.first <= 0 && 0 <= a.second;
}

std::string rat_decimal(const Rational& x, unsigned digits) {
    return Real::rational(boost::multiprecision::numerator(x),
                          boost::multiprecision::denominator(x))
        .decimal(digits);
}

}  // namespace

IdentityReport check_identities(const AlphaContext& ctx, size_t depth,
                                unsigned render_digits) {
    if (depth < 2)
        throw Error(ErrorCode::ParseError, "cfrac", "check_identities",
                    "depth must be >= 2");
    IdentityReport report;
    report.depth_requested = depth;
    report.interval_mode = !ctx.exact_mode();

    size_t n = depth;
    if (auto avail = ctx.available_digits()) {
        if (*avail < 2)
            throw Error(ErrorCode::DigitsExhausted, "cfrac",
                        "check_identities",
                        "at least two partial quotients are required");
        n = std::min(n, *avail);
    }
    report.depth_used = n;

    const size_t m_even = n / 2;        // even-index sum through a_{2m}
    const size_t m_odd = (n - 1) / 2;   // odd-index sum through a_{2m'+1}
    const size_t n0 = std::max<size_t>(2, n / 2);  // telescoped-tail start

    auto fail = [&](const std::string& name, const std::string& detail) {
        throw Error(ErrorCode::IdentityViolation, "cfrac", "check_identities",
                    "identity '" + name + "' violated: " + detail);
    };

    if (ctx.exact_mode()) {
        const Real one(1);
        const Real& alpha = ctx.alpha_exact();
        Real s_abs(0), s_signed(0), s_even(0), s_odd(0), s_tail(0);
        for (size_t k = 1; k <= n; ++k) {
            Real term = Real(ctx.a(k)) * ctx.theta(static_cast<long>(k) - 1);
            Real term_abs = k % 2 == 1 ? term : -term;
            s_abs += term_abs;
            s_signed += term;
            if (k % 2 == 0) s_even += term_abs;
            if (k % 2 == 1) s_odd += term_abs;
            if (k >= n0) s_tail += term_abs;
        }
        long ln = static_cast<long>(n);
        Real tail_n = ctx.theta_abs(ln - 1) + ctx.theta_abs(ln);

        auto emit = [&](const std::string& name, const Real& closed,
                        const Real& partial, const Real& remainder,
                        const Real& bound) {
            Real diff = closed - partial;
            if (diff != remainder)
                fail(name, "remainder mismatch, discrepancy " +
                               (diff - remainder).decimal(render_digits));
            if (diff.abs() > bound) fail(name, "tail bound exceeded");
            report.checks.push_back({name, closed.decimal(render_digits),
                                     partial.decimal(render_digits),
                                     bound.decimal(render_digits),
                                     diff.abs().decimal(render_digits), true});
        };

        emit("sum-abs", one + alpha, s_abs, tail_n, tail_n);
        emit("sum-signed", one - alpha, s_signed,
             -ctx.theta(ln - 1) - ctx.theta(ln), tail_n);
        emit("sum-even", alpha, s_even,
             ctx.theta_abs(static_cast<long>(2 * m_even)), tail_n);
        emit("sum-odd", one, s_odd,
             ctx.theta_abs(static_cast<long>(2 * m_odd + 1)), tail_n);
        emit("telescoped-tail",
             ctx.theta_abs(static_cast<long>(n0) - 2) +
                 ctx.theta_abs(static_cast<long>(n0) - 1),
             s_tail, tail_n, tail_n);
    } else {
        ctx.ensure_level(n + 3);
        auto th = [&](long k) { return ctx.theta_bounds(k); };
        auto th_abs = [&](long k) { return ctx.theta_abs_bounds(k); };
        RatPair one{Rational(1), Rational(1)};
        RatPair s_abs{0, 0}, s_signed{0, 0}, s_even{0, 0}, s_odd{0, 0},
            s_tail{0, 0};
        for (size_t k = 1; k <= n; ++k) {
            Int ak = ctx.a(k);
            RatPair term = rp_scale(ak, th(static_cast<long>(k) - 1));
            RatPair term_abs = rp_scale(ak, th_abs(static_cast<long>(k) - 1));
            s_abs = rp_add(s_abs, term_abs);
            s_signed = rp_add(s_signed, term);
            if (k % 2 == 0) s_even = rp_add(s_even, term_abs);
            if (k % 2 == 1) s_odd = rp_add(s_odd, term_abs);
            if (k >= n0) s_tail = rp_add(s_tail, term_abs);
        }
        long ln = static_cast<long>(n);
        RatPair alpha{ctx.theta_bounds(0)};
        RatPair tail_n = rp_add(th_abs(ln - 1), th_abs(ln));

        auto emit = [&](const std::string& name, const RatPair& closed,
                        const RatPair& partial, const RatPair& remainder,
                        const RatPair& bound) {
            RatPair diff = rp_sub(closed, partial);
            if (!rp_contains_zero(rp_sub(diff, remainder)))
                fail(name, "certified enclosures exclude the identity");
            report.checks.push_back(
                {name, rat_decimal(closed.first, render_digits),
                 rat_decimal(partial.first, render_digits),
                 rat_decimal(bound.second, render_digits),
                 rat_decimal(rp_abs(diff).second, render_digits), true});
        };

        emit("sum-abs", rp_add(one, alpha), s_abs, tail_n, tail_n);
        emit("sum-signed", rp_sub(one, alpha), s_signed,
             rp_neg(rp_add(th(ln - 1), th(ln))), tail_n);
        emit("sum-even", alpha, s_even, th_abs(static_cast<long>(2 * m_even)),
             tail_n);
        emit("sum-odd", one, s_odd, th_abs(static_cast<long>(2 * m_odd + 1)),
             tail_n);
        emit("telescoped-tail",
             rp_add(th_abs(static_cast<long>(n0) - 2),
                    th_abs(static_cast<long>(n0) - 1)),
             s_tail, tail_n, tail_n);
    }

    report.all_pass = true;
    for (const auto& c : report.checks) report.all_pass &= c.pass;
    return report;
}

}  // namespace ostrowski
