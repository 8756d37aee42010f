// Acceptance suite: every criterion prints one line and the binary exits
// nonzero if any fails. Run through ctest or directly; criterion 8 needs
// OSTROWSKI_CLI pointing at the command line binary.

#include "ostrowski/cfrac.hpp"
#include "ostrowski/literal.hpp"
#include "ostrowski/oracle.hpp"
#include "ostrowski/ostrowski_abs.hpp"
#include "ostrowski/ostrowski_alt.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace ostrowski;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

#define REQUIRE_OR_NOTE(cond, what)                                       \
    do {                                                                  \
        if (!(cond)) {                                                    \
            g_notes.push_back(what);                                      \
            ok = false;                                                   \
        }                                                                 \
    } while (0)

void report(int n, const std::string& name, bool ok, double ms,
            double limit_ms) {
    if (limit_ms > 0 && ms > limit_ms) {
        ok = false;
        g_notes.push_back("runtime " + std::to_string(ms) + " ms over " +
                          std::to_string(limit_ms) + " ms");
    }
    std::printf("[%s] criterion %d: %s (%.1f ms)\n", ok ? "PASS" : "FAIL", n,
                name.c_str(), ms);
    if (!ok) {
        ++g_failures;
        for (const auto& note : g_notes) std::printf("       - %s\n", note.c_str());
    }
    g_notes.clear();
}

Real golden() { return Real::quadratic(-1, 1, 5, 2); }
Real sqrt2m1() { return Real::quadratic(-1, 1, 2, 1); }

Real rat_to_real(const Rational& x) {
    return Real::rational(boost::multiprecision::numerator(x),
                          boost::multiprecision::denominator(x));
}

// 1. Identity suite at depth 40 within |theta_38| + |theta_39|.
void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        for (const Real& alpha : {golden(), sqrt2m1()}) {
            auto ctx = AlphaContext::make_exact(alpha);
            IdentityReport report = check_identities(*ctx, 40);
            REQUIRE_OR_NOTE(report.all_pass, "exact identity check failed");
            // stated bound: remainders at depth 40 stay under
            // |theta_38| + |theta_39|
            Real stated = ctx->theta_abs(38) + ctx->theta_abs(39);
            Real s_abs(0);
            for (size_t k = 1; k <= 40; ++k)
                s_abs += Real(ctx->a(k)) *
                         ctx->theta_abs(static_cast<long>(k) - 1);
            Real diff = Real(1) + alpha - s_abs;
            REQUIRE_OR_NOTE((diff.abs() - stated).sign() <= 0,
                            "stated tail bound exceeded");
        }
        // (sqrt(3)-1)/2 supplied as a cf literal, certified enclosures
        auto lit = AlphaContext::make(parse_alpha_spec("cf:[;2,1]"));
        IdentityReport report = check_identities(*lit, 40);
        REQUIRE_OR_NOTE(report.all_pass, "interval identity check failed");
        REQUIRE_OR_NOTE(report.interval_mode, "cf literal not in interval mode");
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(1, "identity suite for phi, sqrt(2)-1, cf:[;2,1] at depth 40", ok,
           ms, 1000.0);
}

// 2. sum_{k=0}^{59} |theta_k| = 1 + phi within 1e-12 (exact residual
// phi^59 = |theta_58|).
void criterion_2() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        auto ctx = AlphaContext::make_exact(golden());
        Real sum(0);
        for (long k = 0; k <= 59; ++k) sum += ctx->theta_abs(k);
        Real diff = Real(1) + golden() - sum;
        REQUIRE_OR_NOTE(diff.sign() > 0, "partial sum overshot");
        REQUIRE_OR_NOTE(diff == ctx->theta_abs(58),
                        "residual is not exactly phi^59");
        Int trillion = Int(1000000000000LL);
        REQUIRE_OR_NOTE((diff - Real::rational(1, trillion)).sign() < 0,
                        "residual not below 1e-12");
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(2, "golden-section theta series reaches 1 + phi", ok, ms, 100.0);
}

// 3. Telescoped tail exactness over sqrt(2)-1.
void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        auto ctx = AlphaContext::make_exact(sqrt2m1());
        std::mt19937_64 gen(0xacce97);
        std::uniform_int_distribution<long> n_dist(2, 30);
        std::uniform_int_distribution<long> extra(1, 10);
        for (int i = 0; i < 20; ++i) {
            long n = n_dist(gen);
            long N = n + extra(gen);
            Real sum(0);
            for (long k = n; k <= N; ++k)
                sum += Real(ctx->a(static_cast<size_t>(k))) *
                       ctx->theta_abs(k - 1);
            Real lhs = sum + ctx->theta_abs(N - 1) + ctx->theta_abs(N);
            Real rhs = ctx->theta_abs(n - 2) + ctx->theta_abs(n - 1);
            REQUIRE_OR_NOTE(lhs == rhs,
                            "telescoped identity failed at n=" +
                                std::to_string(n));
        }
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(3, "telescoped tails are exact identities", ok, ms, 0);
}

// 4. Absolute round trip for 1000 random rationals over sqrt(2)-1.
void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        auto ctx = AlphaContext::make_exact(sqrt2m1());
        std::mt19937_64 gen(0xacce98);
        std::uniform_int_distribution<long> den_dist(2, 1000000);
        Real tail = ctx->theta_abs(63) + ctx->theta_abs(64);
        for (int i = 0; i < 1000 && ok; ++i) {
            long den = den_dist(gen);
            std::uniform_int_distribution<long> num_dist(1, den - 1);
            Real beta = Real::rational(num_dist(gen), den);
            auto [digits, trace] = abs_expand(*ctx, beta, 64);
            EvalResult ev = abs_evaluate(*ctx, digits, 64);
            if (digits.terminated()) {
                REQUIRE_OR_NOTE(ev.exact && *ev.value == beta,
                                "terminated expansion failed round trip");
            } else {
                Real diff = beta - *ev.value;
                REQUIRE_OR_NOTE(diff.sign() >= 0 &&
                                    (diff - tail).sign() <= 0,
                                "truncated expansion escaped tail bound");
            }
            AbsDigits probe = digits;
            probe.intent = SeqIntent::Prefix;
            Verdict v = abs_validate(ctx->cf(65), probe);
            REQUIRE_OR_NOTE(v.kind != Verdict::Kind::Inadmissible,
                            "emitted prefix failed validation");
        }
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(4, "absolute round trip on 1000 rational seeds", ok, ms, 10000.0);
}

// 5. Alternating residual invariant with exact comparisons.
void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        std::mt19937_64 gen(0xacce99);
        for (const Real& alpha : {golden(), sqrt2m1()}) {
            auto ctx = AlphaContext::make_exact(alpha);
            int tested = 0;
            while (tested < 500 && ok) {
                std::uniform_int_distribution<long> den_dist(2, 100000);
                long den = den_dist(gen);
                std::uniform_int_distribution<long> num_dist(-(den - 1),
                                                             den - 1);
                Real gamma = Real::rational(num_dist(gen), den);
                if ((gamma + alpha).sign() <= 0 || gamma.is_zero()) continue;
                ++tested;
                auto [digits, trace] = alt_expand(*ctx, gamma, 48);
                size_t steps = digits.digits.size();
                for (size_t k = 1; k <= steps; ++k) {
                    if (digits.terminated() && k == steps) break;
                    int rho = static_cast<int>(k % 2);
                    Real lo = ctx->theta(static_cast<long>(k) - rho);
                    Real hi = ctx->theta(static_cast<long>(k) - 1 + rho);
                    const Real& g = trace.residuals[k - 1];
                    REQUIRE_OR_NOTE((g + lo).sign() > 0 &&
                                        (g + hi).sign() < 0,
                                    "residual left the parity interval");
                    if (!ok) break;
                }
            }
        }
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(5, "alternating residuals stay in the parity interval", ok, ms, 0);
}

// 6. Uniqueness certification by brute force.
void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        for (const Real& alpha : {golden(), sqrt2m1()}) {
            auto ctx = AlphaContext::make_exact(alpha);
            auto ta = Clock::now();
            EnumerationReport abs_report = certify_uniqueness_abs(*ctx, 8);
            double abs_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - ta)
                    .count();
            REQUIRE_OR_NOTE(abs_report.pass(),
                            "absolute certification failed");
            REQUIRE_OR_NOTE(abs_ms < 10000.0, "absolute certification slow");
            auto tb = Clock::now();
            EnumerationReport alt_report =
                certify_uniqueness_alt(*ctx, 6, Strictness::TheoremProof);
            double alt_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - tb)
                    .count();
            REQUIRE_OR_NOTE(alt_report.pass(),
                            "alternating certification failed");
            REQUIRE_OR_NOTE(alt_ms < 10000.0, "alternating certification slow");
        }
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(6, "uniqueness certified at depth 8 (abs) and 6 (alt)", ok, ms, 0);
}

// 7. Golden digit streams: binary Zeckendorf-like, and the all-ones
// alternating expansion of 1 - phi.
void criterion_7() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        auto ctx = AlphaContext::make_exact(golden());
        std::mt19937_64 gen(0xacce9a);
        std::uniform_int_distribution<long> den_dist(2, 1000000);
        for (int i = 0; i < 1000 && ok; ++i) {
            long den = den_dist(gen);
            std::uniform_int_distribution<long> num_dist(1, den - 1);
            Real beta = Real::rational(num_dist(gen), den);
            auto [digits, trace] = abs_expand(*ctx, beta, 48);
            for (size_t k = 0; k < digits.digits.size(); ++k) {
                bool binary = digits.digits[k] == 0 || digits.digits[k] == 1;
                bool no_pair = k == 0 || digits.digits[k - 1] == 0 ||
                               digits.digits[k] == 0;
                REQUIRE_OR_NOTE(binary && no_pair,
                                "digit stream not Zeckendorf-like");
                if (!ok) break;
            }
        }
        auto [ones, trace] = alt_expand(*ctx, Real(1) - golden(), 40);
        REQUIRE_OR_NOTE(ones.digits.size() == 40, "expected 40 digits");
        Real expect = golden() * golden();
        for (size_t k = 1; k <= ones.digits.size(); ++k) {
            expect *= -golden();
            REQUIRE_OR_NOTE(ones.digits[k - 1] == 1 &&
                                trace.residuals[k - 1] == expect,
                            "all-ones expansion residual mismatch");
            if (!ok) break;
        }
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(7, "golden-section streams are binary without adjacent ones", ok,
           ms, 0);
}

// 8. Endpoint and domain rejections exit with code 2 through the CLI.
void criterion_8() {
    auto t0 = Clock::now();
    bool ok = true;
    const char* cli = std::getenv("OSTROWSKI_CLI");
    if (!cli) {
        REQUIRE_OR_NOTE(false, "OSTROWSKI_CLI not set");
    } else {
        const std::string phi = "\"quad:(-1+1*sqrt(5))/2\"";
        const std::vector<std::string> cases = {
            "abs-expand --alpha " + phi + " --beta \"rat:0/1\"",
            "abs-expand --alpha " + phi + " --beta \"rat:1/1\"",
            "alt-expand --alpha " + phi + " --gamma \"quad:(1-1*sqrt(5))/2\"",
            "alt-expand --alpha " + phi + " --gamma \"rat:1/1\"",
            "theta --alpha \"rat:2/3\"",
            "abs-expand --alpha " + phi + " --beta \"quad:(-1+1*sqrt(2))/2\"",
        };
        for (const std::string& args : cases) {
            std::string cmd =
                std::string(cli) + " " + args + " > /dev/null 2>&1";
            int status = std::system(cmd.c_str());
            int code = WEXITSTATUS(status);
            REQUIRE_OR_NOTE(code == 2,
                            "expected exit 2, got " + std::to_string(code) +
                                " for: " + args);
        }
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(8, "domain rejections exit with code 2", ok, ms, 0);
}

// 9. CF digits match an independent Euclidean trace; golden and sqrt(2)-1
// periods.
void criterion_9() {
    auto t0 = Clock::now();
    bool ok = true;
    try {
        std::mt19937_64 gen(0xacce9b);
        std::uniform_int_distribution<long> num(-100000, 100000);
        std::uniform_int_distribution<long> den(1, 99991);
        for (int i = 0; i < 500 && ok; ++i) {
            Int n = num(gen), d = den(gen);
            CFExpansion cf = cf_expand(Real::rational(n, d), 64);
            REQUIRE_OR_NOTE(cf.limit.has_value(), "rational did not terminate");
            Int a = n, b = d;
            std::vector<Int> euclid;
            while (b != 0) {
                Int q = floor_div(a, b);
                euclid.push_back(q);
                Int r = a - q * b;
                a = b;
                b = r;
            }
            bool match = euclid.size() == cf.digits.size() + 1 &&
                         euclid[0] == cf.a0;
            for (size_t k = 0; match && k < cf.digits.size(); ++k)
                match = euclid[k + 1] == cf.digits[k];
            REQUIRE_OR_NOTE(match, "digit trace diverged from Euclid");
        }
        CFExpansion phi = cf_expand(golden(), 8);
        REQUIRE_OR_NOTE(phi.period && phi.period->digits ==
                                          std::vector<Int>{Int(1)},
                        "golden period is not [1]");
        CFExpansion two = cf_expand(sqrt2m1(), 8);
        REQUIRE_OR_NOTE(two.period && two.period->digits ==
                                          std::vector<Int>{Int(2)},
                        "sqrt(2)-1 period is not [2]");
    } catch (const Error& e) {
        REQUIRE_OR_NOTE(false, std::string("threw: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                    .count();
    report(9, "cf digits match the Euclidean trace; periods detected", ok, ms,
           0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
