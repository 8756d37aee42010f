#include "ostrowski/oracle.hpp"

#include <algorithm>
#include <utility>

namespace ostrowski {

namespace {

void check_depth(size_t depth, const OracleConfig& config, const char* op) {
    if (depth < 1 || depth > config.depth_cap)
        throw Error(ErrorCode::CapExceeded, "oracle", op,
                    "depth must lie in [1, " +
                        std::to_string(config.depth_cap) + "]");
}

struct Budget {
    size_t left;
    void spend(const char* op) {
        if (left == 0)
            throw Error(ErrorCode::CapExceeded, "oracle", op,
                        "sequence budget exhausted");
        --left;
    }
};

void dfs_abs(const CFExpansion& cf, size_t depth, std::vector<Int>& prefix,
             std::vector<AbsDigits>& out, Budget& budget) {
    size_t k = prefix.size() + 1;
    if (k > depth) return;
    const Int& ak = cf.digit(k);
    bool prev_max = !prefix.empty() && prefix.back() == cf.digit(k - 1);
    // Condition (ii) prunes everything after a maximal digit except zero.
    Int hi = prev_max ? Int(0) : ak;
    for (Int b(0); b <= hi; ++b) {
        budget.spend("enumerate_abs");
        prefix.push_back(b);
        if (b >= 1) {
            AbsDigits seq;
            seq.digits = prefix;
            seq.intent = SeqIntent::Finite;
            out.push_back(std::move(seq));
        }
        dfs_abs(cf, depth, prefix, out, budget);
        prefix.pop_back();
    }
}

void dfs_alt(const CFExpansion& cf, size_t depth, Strictness strictness,
             std::vector<Int>& prefix, std::vector<AltDigits>& out,
             Budget& budget) {
    size_t k = prefix.size() + 1;
    if (k > depth) return;
    const Int& ak = cf.digit(k);
    for (Int c(0); c <= ak; ++c) {
        // The zero rule makes interior zeros after a non-maximal digit dead
        // ends: no completion can ever be admissible (trailing zeros are
        // ruled out by the final-digit condition).
        if (c == 0 && k >= 2 && prefix.back() != cf.digit(k - 1)) continue;
        budget.spend("enumerate_alt");
        prefix.push_back(c);
        if (c >= 1) {
            AltDigits seq;
            seq.digits = prefix;
            seq.intent = SeqIntent::Finite;
            seq.strictness = strictness;
            Verdict v = alt_validate(cf, seq, strictness);
            if (v.admissible()) out.push_back(std::move(seq));
        }
        dfs_alt(cf, depth, strictness, prefix, out, budget);
        prefix.pop_back();
    }
}

}  // namespace

std::string digits_to_string(const std::vector<Int>& digits) {
    std::string out = "[";
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += digits[i].str();
    }
    return out + "]";
}

std::vector<AbsDigits> enumerate_abs(const CFExpansion& cf, size_t depth,
                                     const OracleConfig& config) {
    check_depth(depth, config, "enumerate_abs");
    std::vector<AbsDigits> out;
    std::vector<Int> prefix;
    Budget budget{config.sequence_budget};
    dfs_abs(cf, depth, prefix, out, budget);
    return out;
}

std::vector<AltDigits> enumerate_alt(const CFExpansion& cf, size_t depth,
                                     Strictness strictness,
                                     const OracleConfig& config) {
    check_depth(depth, config, "enumerate_alt");
    std::vector<AltDigits> out;
    AltDigits empty;
    empty.strictness = strictness;
    out.push_back(std::move(empty));  // the vacuous expansion of zero
    std::vector<Int> prefix;
    Budget budget{config.sequence_budget};
    dfs_alt(cf, depth, strictness, prefix, out, budget);
    return out;
}

namespace {

struct Evaluated {
    Real value;
    const std::vector<Int>* digits;
};

void sort_and_find_duplicates(std::vector<Evaluated>& values,
                              EnumerationReport& report) {
    std::sort(values.begin(), values.end(),
              [](const Evaluated& a, const Evaluated& b) {
                  return a.value < b.value;
              });
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i].value == values[i + 1].value)
            report.duplicates.push_back(
                {digits_to_string(*values[i].digits),
                 digits_to_string(*values[i + 1].digits),
                 values[i].value.decimal(40)});
    }
    if (!values.empty()) {
        report.min_value = values.front().value.decimal(40);
        report.max_value = values.back().value.decimal(40);
    }
}

}  // namespace

EnumerationReport certify_uniqueness_abs(const AlphaContext& ctx, size_t depth,
                                         const OracleConfig& config) {
    if (!ctx.exact_mode())
        throw Error(ErrorCode::PrecisionExhausted, "oracle",
                    "certify_uniqueness_abs",
                    "certification requires an exact base");
    EnumerationReport report;
    report.alpha = ctx.alpha_exact().literal();
    report.variant = "absolute";
    report.depth = depth;

    CFExpansion cf = ctx.cf(depth + 1);
    std::vector<AbsDigits> seqs = enumerate_abs(cf, depth, config);
    report.count = seqs.size();

    const Real zero(0), one(1);
    std::vector<Evaluated> values;
    values.reserve(seqs.size());
    for (const AbsDigits& seq : seqs) {
        Real v(0);
        for (size_t k = 1; k <= seq.digits.size(); ++k)
            v += Real(seq.digits[k - 1]) *
                 ctx.theta_abs(static_cast<long>(k) - 1);
        if (v <= zero || v >= one)
            report.range_violations.push_back(
                {digits_to_string(seq.digits), v.decimal(40)});
        auto [recovered, trace] = abs_expand(ctx, v, depth + 2);
        if (!recovered.terminated() || recovered.digits != seq.digits)
            report.round_trip_failures.push_back(
                {digits_to_string(seq.digits),
                 digits_to_string(recovered.digits), v.decimal(40)});
        values.push_back({std::move(v), &seq.digits});
    }
    sort_and_find_duplicates(values, report);
    return report;
}

EnumerationReport certify_uniqueness_alt(const AlphaContext& ctx, size_t depth,
                                         Strictness strictness,
                                         const OracleConfig& config) {
    if (!ctx.exact_mode())
        throw Error(ErrorCode::PrecisionExhausted, "oracle",
                    "certify_uniqueness_alt",
                    "certification requires an exact base");
    EnumerationReport report;
    report.alpha = ctx.alpha_exact().literal();
    report.variant = "alternating";
    report.depth = depth;
    report.strictness = strictness;

    CFExpansion cf = ctx.cf(depth + 1);
    std::vector<AltDigits> seqs = enumerate_alt(cf, depth, strictness, config);
    report.count = seqs.size();

    const Real minus_alpha = -ctx.alpha_exact();
    const Real one(1);
    std::vector<Evaluated> values;
    values.reserve(seqs.size());
    for (const AltDigits& seq : seqs) {
        Real v(0);
        for (size_t k = 1; k <= seq.digits.size(); ++k)
            v += Real(seq.digits[k - 1]) * ctx.theta(static_cast<long>(k) - 1);
        if (v <= minus_alpha || v >= one)
            report.range_violations.push_back(
                {digits_to_string(seq.digits), v.decimal(40)});
        auto [recovered, trace] = alt_expand(ctx, v, depth + 2);
        if (!recovered.terminated() || recovered.digits != seq.digits)
            report.round_trip_failures.push_back(
                {digits_to_string(seq.digits),
                 digits_to_string(recovered.digits), v.decimal(40)});
        values.push_back({std::move(v), &seq.digits});
    }
    sort_and_find_duplicates(values, report);
    return report;
}

}  // namespace ostrowski
