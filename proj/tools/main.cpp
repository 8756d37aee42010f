#include "ostrowski/json_io.hpp"
#include "ostrowski/literal.hpp"
#include "ostrowski/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace ostrowski;

struct Options {
    std::string alpha;
    std::string seed;
    std::string digits;
    std::string b0 = "0";
    std::string c0 = "0";
    std::string variant = "absolute";
    std::string strictness = "theorem-proof";
    std::string format = "json";
    size_t depth = 64;
    unsigned precision = 50;
    bool prefix_intent = false;
    bool depth_given = false;
};

Strictness parse_strictness(const std::string& s) {
    if (s == "theorem-proof") return Strictness::TheoremProof;
    if (s == "definition") return Strictness::Definition;
    throw Error(ErrorCode::ParseError, "cli", "parse",
                "strictness must be 'theorem-proof' or 'definition'");
}

void emit(const Json& j, const Options& opt) {
    if (opt.format == "table")
        std::cout << render_table(j);
    else
        std::cout << j.dump(2) << "\n";
}

// Seeds may come from the flag or, with "-", one literal per stdin line.
std::vector<std::string> seed_batch(const std::string& seed) {
    if (seed != "-") return {seed};
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

template <typename Fn>
int run_batch(const Options& opt, Fn item) {
    std::vector<std::string> seeds = seed_batch(opt.seed);
    if (seeds.size() == 1) {
        emit(item(seeds[0]), opt);
        return 0;
    }
    Json arr = Json::array();
    bool failed = false;
    for (const std::string& s : seeds) {
        try {
            arr.push_back(item(s));
        } catch (const Error& e) {
            arr.push_back(error_json(e));
            failed = true;
        }
    }
    emit(arr, opt);
    return failed ? 2 : 0;
}

// Digit-literal to sequence; "[...;...]" marks a periodic continuation.
SeqIntent literal_intent(const DigitLiteral& lit, bool prefix) {
    if (!lit.period.empty()) return SeqIntent::Periodic;
    return prefix ? SeqIntent::Prefix : SeqIntent::Finite;
}

AbsDigits make_abs_sequence(const Options& opt) {
    DigitLiteral lit = parse_digit_literal(opt.digits);
    AbsDigits seq;
    seq.b0 = int_from_string(opt.b0);
    seq.digits = std::move(lit.digits);
    seq.intent = literal_intent(lit, opt.prefix_intent);
    seq.period = std::move(lit.period);
    return seq;
}

AltDigits make_alt_sequence(const Options& opt) {
    DigitLiteral lit = parse_digit_literal(opt.digits);
    AltDigits seq;
    seq.c0 = int_from_string(opt.c0);
    seq.digits = std::move(lit.digits);
    seq.intent = literal_intent(lit, opt.prefix_intent);
    seq.period = std::move(lit.period);
    seq.strictness = parse_strictness(opt.strictness);
    return seq;
}

OracleConfig oracle_config() {
    OracleConfig config;
    if (const char* cap = std::getenv("OSTROWSKI_MAX_BUDGET"))
        config.sequence_budget = std::strtoull(cap, nullptr, 10);
    return config;
}

int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "cf") {
        Real r = parse_real_literal(opt.alpha);
        CFExpansion cf = cf_expand(r, opt.depth);
        emit(cf_json(cf), opt);
        return 0;
    }

    AlphaSpec spec = parse_alpha_spec(opt.alpha);
    auto ctx = AlphaContext::make(spec);

    if (cmd == "theta") {
        size_t n = opt.depth;
        if (auto avail = ctx->available_digits()) n = std::min(n, *avail);
        Json j;
        j["alpha"] = alpha_json(spec, opt.precision);
        j["depth_used"] = std::to_string(n);
        j["cf"] = cf_json(ctx->cf(n));
        j["convergents"] = convergents_json(convergents(*ctx, n));
        j["thetas"] = theta_json(theta_seq(*ctx, n), opt.precision);
        emit(j, opt);
        return 0;
    }
    if (cmd == "identities") {
        IdentityReport report = check_identities(*ctx, opt.depth, opt.precision);
        emit(identities_json(spec, report, opt.precision), opt);
        return 0;
    }
    if (cmd == "abs-expand") {
        return run_batch(opt, [&](const std::string& s) {
            auto [digits, trace] =
                abs_expand(*ctx, parse_real_literal(s), opt.depth);
            return abs_expansion_json(spec, *ctx, digits, opt.precision);
        });
    }
    if (cmd == "alt-expand") {
        return run_batch(opt, [&](const std::string& s) {
            auto [digits, trace] =
                alt_expand(*ctx, parse_real_literal(s), opt.depth);
            digits.strictness = parse_strictness(opt.strictness);
            return alt_expansion_json(spec, *ctx, digits, opt.precision);
        });
    }
    if (cmd == "abs-eval") {
        AbsDigits digits = make_abs_sequence(opt);
        EvalResult result = abs_evaluate(*ctx, digits, opt.depth);
        emit(eval_json(spec, result, "absolute", opt.precision), opt);
        return 0;
    }
    if (cmd == "alt-eval") {
        AltDigits digits = make_alt_sequence(opt);
        EvalResult result = alt_evaluate(*ctx, digits, opt.depth);
        emit(eval_json(spec, result, "alternating", opt.precision), opt);
        return 0;
    }
    if (cmd == "abs-validate") {
        AbsDigits digits = make_abs_sequence(opt);
        size_t want = digits.digits.size() + 2 * (digits.period.size() + 1);
        if (auto avail = ctx->available_digits())
            want = std::min(want, *avail);
        Verdict v = abs_validate(ctx->cf(want), digits);
        emit(verdict_json(v), opt);
        return 0;
    }
    if (cmd == "alt-validate") {
        AltDigits digits = make_alt_sequence(opt);
        size_t want = digits.digits.size() + 2 * (digits.period.size() + 1);
        if (auto avail = ctx->available_digits())
            want = std::min(want, *avail);
        Verdict v = alt_validate(ctx->cf(want), digits, digits.strictness);
        emit(verdict_json(v), opt);
        return 0;
    }
    if (cmd == "certify") {
        size_t depth = opt.depth;
        if (!opt.depth_given) depth = opt.variant == "alternating" ? 6 : 8;
        EnumerationReport report;
        if (opt.variant == "absolute") {
            report = certify_uniqueness_abs(*ctx, depth, oracle_config());
        } else if (opt.variant == "alternating") {
            report = certify_uniqueness_alt(
                *ctx, depth, parse_strictness(opt.strictness),
                oracle_config());
        } else {
            throw Error(ErrorCode::ParseError, "cli", "certify",
                        "variant must be 'absolute' or 'alternating'");
        }
        emit(report_json(report), opt);
        return report.pass() ? 0 : 3;
    }
    if (cmd == "line-expand") {
        if (opt.variant == "absolute") {
            return run_batch(opt, [&](const std::string& s) {
                auto [digits, trace] =
                    abs_expand_line(*ctx, parse_real_literal(s), opt.depth);
                return abs_expansion_json(spec, *ctx, digits, opt.precision);
            });
        }
        if (opt.variant == "alternating") {
            return run_batch(opt, [&](const std::string& s) {
                auto [digits, trace] =
                    alt_expand_line(*ctx, parse_real_literal(s), opt.depth);
                digits.strictness = parse_strictness(opt.strictness);
                return alt_expansion_json(spec, *ctx, digits, opt.precision);
            });
        }
        throw Error(ErrorCode::ParseError, "cli", "line-expand",
                    "variant must be 'absolute' or 'alternating'");
    }
    throw Error(ErrorCode::ParseError, "cli", "dispatch",
                "unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued fraction and Ostrowski expansions"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"cf", "Continued fraction expansion of an exact real"},
        {"theta", "Convergents and theta coefficients of a base alpha"},
        {"identities", "Verify the closed-form digit identities"},
        {"abs-expand", "Absolute Ostrowski expansion of beta in (0,1)"},
        {"abs-eval", "Evaluate an absolute digit sequence with bounds"},
        {"abs-validate", "Check Markov admissibility of a digit sequence"},
        {"alt-expand", "Alternating Ostrowski expansion of gamma in (-alpha,1)"},
        {"alt-eval", "Evaluate an alternating digit sequence with bounds"},
        {"alt-validate", "Check (-alpha)-admissibility of a digit sequence"},
        {"certify", "Brute-force uniqueness certification at small depth"},
        {"line-expand", "Expand an arbitrary real with its integer digit"},
    };

    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--alpha", opt.alpha, "base/real literal")->required();
        sub->add_option("--depth", opt.depth, "digit/expansion depth");
        sub->add_option("--precision", opt.precision,
                        "decimal digits in renderings");
        sub->add_option("--format", opt.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
        if (name == "abs-expand")
            sub->add_option("--beta", opt.seed, "seed literal or '-' for stdin")
                ->required();
        if (name == "alt-expand")
            sub->add_option("--gamma", opt.seed,
                            "seed literal or '-' for stdin")
                ->required();
        if (name == "line-expand") {
            sub->add_option("--real", opt.seed,
                            "real literal or '-' for stdin")
                ->required();
            sub->add_option("--variant", opt.variant,
                            "absolute or alternating");
        }
        if (name == "certify")
            sub->add_option("--variant", opt.variant,
                            "absolute or alternating");
        if (name == "abs-eval" || name == "abs-validate") {
            sub->add_option("--digits", opt.digits, "digit literal [..] or [..;..]")
                ->required();
            sub->add_option("--b0", opt.b0, "integer digit b0");
            sub->add_flag("--prefix", opt.prefix_intent,
                          "treat digits as a truncated prefix");
        }
        if (name == "alt-eval" || name == "alt-validate") {
            sub->add_option("--digits", opt.digits, "digit literal [..] or [..;..]")
                ->required();
            sub->add_option("--c0", opt.c0, "integer digit c0");
            sub->add_flag("--prefix", opt.prefix_intent,
                          "treat digits as a truncated prefix");
        }
        if (name.rfind("alt-", 0) == 0 || name == "certify" ||
            name == "line-expand")
            sub->add_option("--strictness", opt.strictness,
                            "theorem-proof or definition")
                ->check(CLI::IsMember({"theorem-proof", "definition"}));
    }

    CLI11_PARSE(app, argc, argv);

    CLI::App* chosen = app.get_subcommands().front();
    const std::string cmd = chosen->get_name();
    opt.depth_given = chosen->count("--depth") > 0;
    try {
        return dispatch(cmd, opt);
    } catch (const Error& e) {
        std::cout << error_json(e).dump(2) << "\n";
        return e.code() == ErrorCode::IdentityViolation ? 3 : 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n";
        return 1;
    }
}
