#include "ostrowski/json_io.hpp"

#include <sstream>

namespace ostrowski {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::RationalBase: return "RationalBase";
        case ErrorCode::SeedOutOfRange: return "SeedOutOfRange";
        case ErrorCode::DigitsExhausted: return "DigitsExhausted";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::InadmissibleDigits: return "InadmissibleDigits";
        case ErrorCode::IdentityViolation: return "IdentityViolation";
        case ErrorCode::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

const char* strictness_name(Strictness s) {
    return s == Strictness::TheoremProof ? "theorem-proof" : "definition";
}

Json int_json(const Int& n) { return n.str(); }

Json digits_json(const std::vector<Int>& digits) {
    Json arr = Json::array();
    for (const Int& d : digits) arr.push_back(d.str());
    return arr;
}

Json real_json(const Real& x, unsigned precision) {
    Json j;
    j["p"] = x.p().str();
    j["q"] = x.q().str();
    j["d"] = x.d().str();
    j["r"] = x.r().str();
    j["decimal"] = x.decimal(precision);
    return j;
}

Json alpha_json(const AlphaSpec& spec, unsigned precision) {
    if (const Real* x = std::get_if<Real>(&spec))
        return real_json(*x, precision);
    const CFLiteral& lit = std::get<CFLiteral>(spec);
    Json j;
    j["cf"] = Json{{"preperiod", digits_json(lit.preperiod)},
                   {"period", digits_json(lit.period)}};
    return j;
}

Json cf_json(const CFExpansion& cf) {
    Json j;
    j["a0"] = cf.a0.str();
    j["digits"] = digits_json(cf.digits);
    if (cf.limit)
        j["limit"] = std::to_string(*cf.limit);
    else
        j["limit"] = cf.infinite ? "inf" : "undetermined";
    if (cf.period) {
        j["period"] = Json{{"preperiod_length",
                            std::to_string(cf.period->preperiod_length)},
                           {"digits", digits_json(cf.period->digits)}};
    } else {
        j["period"] = nullptr;
    }
    return j;
}

Json convergents_json(const Convergents& conv) {
    Json j;
    j["k_min"] = "-1";
    j["p"] = digits_json(conv.p);
    j["q"] = digits_json(conv.q);
    return j;
}

Json theta_json(const ThetaView& view, unsigned precision) {
    Json j;
    j["k_min"] = "-1";
    if (!view.exact.empty()) {
        Json arr = Json::array();
        for (const Real& t : view.exact) arr.push_back(real_json(t, precision));
        j["exact"] = arr;
    } else {
        Json arr = Json::array();
        for (const auto& [lo, hi] : view.enclosures) {
            Real rlo = Real::rational(boost::multiprecision::numerator(lo),
                                      boost::multiprecision::denominator(lo));
            Real rhi = Real::rational(boost::multiprecision::numerator(hi),
                                      boost::multiprecision::denominator(hi));
            arr.push_back(Json{{"lower", rlo.decimal(precision)},
                               {"upper", rhi.decimal(precision)}});
        }
        j["enclosures"] = arr;
    }
    return j;
}

Json identities_json(const AlphaSpec& alpha, const IdentityReport& report,
                     unsigned precision) {
    Json j;
    j["alpha"] = alpha_json(alpha, precision);
    j["mode"] = report.interval_mode ? "interval" : "exact";
    j["depth"] = std::to_string(report.depth_requested);
    j["depth_used"] = std::to_string(report.depth_used);
    Json arr = Json::array();
    for (const IdentityCheck& c : report.checks) {
        arr.push_back(Json{{"name", c.name},
                           {"closed_form", c.closed_form},
                           {"partial_sum", c.partial_sum},
                           {"tail_bound", c.tail_bound},
                           {"discrepancy", c.discrepancy},
                           {"pass", c.pass}});
    }
    j["identities"] = arr;
    j["all_pass"] = report.all_pass;
    return j;
}

std::string residual_bound_decimal(const AlphaContext& ctx, size_t n,
                                   unsigned precision) {
    long ln = static_cast<long>(n);
    if (ctx.exact_mode()) {
        Real bound = ctx.theta_abs(ln - 1) + ctx.theta_abs(ln);
        return bound.decimal(precision);
    }
    auto t1 = ctx.theta_abs_bounds(ln - 1);
    auto t2 = ctx.theta_abs_bounds(ln);
    Rational hi = t1.second + t2.second;
    return Real::rational(boost::multiprecision::numerator(hi),
                          boost::multiprecision::denominator(hi))
        .decimal(precision);
}

Json abs_expansion_json(const AlphaSpec& alpha, const AlphaContext& ctx,
                        const AbsDigits& digits, unsigned precision) {
    Json j;
    j["variant"] = "absolute";
    j["alpha"] = alpha_json(alpha, precision);
    j["b0"] = digits.b0.str();
    j["digits"] = digits_json(digits.digits);
    j["terminated"] = digits.terminated();
    j["residual_bound"] =
        digits.terminated()
            ? "0"
            : residual_bound_decimal(ctx, digits.digits.size(), precision);
    return j;
}

Json alt_expansion_json(const AlphaSpec& alpha, const AlphaContext& ctx,
                        const AltDigits& digits, unsigned precision) {
    Json j;
    j["variant"] = "alternating";
    j["alpha"] = alpha_json(alpha, precision);
    j["c0"] = digits.c0.str();
    j["digits"] = digits_json(digits.digits);
    j["terminated"] = digits.terminated();
    j["residual_bound"] =
        digits.terminated()
            ? "0"
            : residual_bound_decimal(ctx, digits.digits.size(), precision);
    j["strictness"] = strictness_name(digits.strictness);
    return j;
}

Json eval_json(const AlphaSpec& alpha, const EvalResult& result,
               const char* variant, unsigned precision) {
    Json j;
    j["variant"] = variant;
    j["alpha"] = alpha_json(alpha, precision);
    j["depth_used"] = std::to_string(result.depth_used);
    j["exact"] = result.exact;
    if (result.value) j["value"] = real_json(*result.value, precision);
    auto dec = [&](const Rational& x) {
        return Real::rational(boost::multiprecision::numerator(x),
                              boost::multiprecision::denominator(x))
            .decimal(precision);
    };
    j["partial_lower"] = dec(result.lo);
    j["partial_upper"] = dec(result.hi);
    j["tail_bound"] = dec(result.tail);
    return j;
}

Json verdict_json(const Verdict& verdict) {
    Json j;
    switch (verdict.kind) {
        case Verdict::Kind::Admissible: j["verdict"] = "admissible"; break;
        case Verdict::Kind::AdmissibleSoFar:
            j["verdict"] = "admissible-so-far";
            break;
        case Verdict::Kind::Inadmissible: j["verdict"] = "inadmissible"; break;
    }
    if (verdict.kind == Verdict::Kind::Inadmissible) {
        j["condition"] = verdict.condition;
        if (verdict.index) j["index"] = std::to_string(*verdict.index);
    }
    return j;
}

Json report_json(const EnumerationReport& report) {
    Json j;
    j["variant"] = report.variant;
    j["alpha"] = report.alpha;
    j["depth"] = std::to_string(report.depth);
    if (report.variant == "alternating")
        j["strictness"] = strictness_name(report.strictness);
    j["count"] = std::to_string(report.count);
    j["min_value"] = report.min_value;
    j["max_value"] = report.max_value;
    Json dups = Json::array();
    for (const auto& d : report.duplicates)
        dups.push_back(Json{{"digits_a", d.digits_a},
                            {"digits_b", d.digits_b},
                            {"value", d.value}});
    j["duplicates"] = dups;
    Json rt = Json::array();
    for (const auto& f : report.round_trip_failures)
        rt.push_back(Json{{"digits", f.digits},
                          {"recovered", f.recovered},
                          {"value", f.value}});
    j["round_trip_failures"] = rt;
    Json rv = Json::array();
    for (const auto& r : report.range_violations)
        rv.push_back(Json{{"digits", r.digits}, {"value", r.value}});
    j["range_violations"] = rv;
    j["pass"] = report.pass();
    return j;
}

Json error_json(const Error& err) {
    Json j;
    Json e;
    e["code"] = error_code_name(err.code());
    e["module"] = err.module_name();
    e["operation"] = err.operation();
    e["message"] = err.what();
    if (err.index()) e["index"] = std::to_string(*err.index());
    j["error"] = e;
    return j;
}

namespace {

void render_value(const Json& j, const std::string& prefix,
                  std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string name = prefix.empty() ? key : prefix + "." + key;
            render_value(value, name, out);
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            out << prefix << ": ";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out << " ";
                if (j[i].is_string())
                    out << j[i].get<std::string>();
                else
                    out << j[i].dump();
            }
            out << "\n";
        } else {
            for (size_t i = 0; i < j.size(); ++i)
                render_value(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else if (j.is_string()) {
        out << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_table(const Json& j) {
    std::ostringstream out;
    render_value(j, "", out);
    return out.str();
}

}  // namespace ostrowski
