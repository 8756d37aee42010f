#include "ostrowski/literal.hpp"

#include <cctype>
#include <regex>

namespace ostrowski {

const Int& CFLiteral::digit(size_t k) const {
    if (k == 0)
        throw Error(ErrorCode::ParseError, "cfrac", "digit",
                    "partial quotients are 1-based");
    size_t i = k - 1;
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty())
        throw Error(ErrorCode::DigitsExhausted, "cfrac", "digit",
                    "continued fraction digit list exhausted at index " +
                        std::to_string(k),
                    static_cast<long long>(k));
    return period[(i - preperiod.size()) % period.size()];
}

std::optional<size_t> CFLiteral::available() const {
    if (periodic()) return std::nullopt;
    return preperiod.size();
}

namespace {

Int parse_int(const std::string& s, const char* what) {
    static const std::regex re(R"(^[+-]?\d+$)");
    if (!std::regex_match(s, re))
        throw Error(ErrorCode::ParseError, "cli", "parse",
                    std::string("invalid integer in ") + what + ": '" + s + "'");
    return int_from_string(s);
}

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
    std::vector<Int> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - start);
        out.push_back(parse_int(tok, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Contents between "[...]", split on optional ';'.
std::pair<std::vector<Int>, std::vector<Int>> parse_bracket_lists(
    const std::string& text, const char* what) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw Error(ErrorCode::ParseError, "cli", "parse",
                    std::string("expected [...] in ") + what);
    std::string body = text.substr(1, text.size() - 2);
    size_t semi = body.find(';');
    if (semi == std::string::npos)
        return {parse_int_list(body, what), {}};
    return {parse_int_list(body.substr(0, semi), what),
            parse_int_list(body.substr(semi + 1), what)};
}

}  // namespace

AlphaSpec parse_alpha_spec(const std::string& text) {
    if (text.rfind("cf:", 0) == 0) {
        auto [pre, per] = parse_bracket_lists(text.substr(3), "cf literal");
        CFLiteral lit{std::move(pre), std::move(per)};
        if (lit.preperiod.empty() && lit.period.empty())
            throw Error(ErrorCode::ParseError, "cli", "parse",
                        "empty cf literal");
        for (const auto& list : {lit.preperiod, lit.period})
            for (const Int& a : list)
                if (a < 1)
                    throw Error(ErrorCode::ParseError, "cli", "parse",
                                "cf digits must be >= 1");
        return lit;
    }
    return parse_real_literal(text);
}

Real parse_real_literal(const std::string& text) {
    static const std::regex rat_re(R"(^rat:([+-]?\d+)(?:/(\d+))?$)");
    static const std::regex quad_re(
        R"(^quad:\(([+-]?\d+)([+-]\d+)\*sqrt\((\d+)\)\)/(\d+)$)");
    std::smatch m;
    if (std::regex_match(text, m, rat_re)) {
        Int num = int_from_string(m[1].str());
        Int den = m[2].matched ? int_from_string(m[2].str()) : Int(1);
        if (den == 0)
            throw Error(ErrorCode::ParseError, "cli", "parse",
                        "rational literal with zero denominator");
        return Real::rational(num, den);
    }
    if (std::regex_match(text, m, quad_re)) {
        Int r = int_from_string(m[4].str());
        if (r == 0)
            throw Error(ErrorCode::ParseError, "cli", "parse",
                        "quadratic literal with zero denominator");
        return Real::quadratic(int_from_string(m[1].str()), int_from_string(m[2].str()),
                               int_from_string(m[3].str()), r);
    }
    throw Error(ErrorCode::ParseError, "cli", "parse",
                "cannot parse real literal '" + text +
                    "' (expected rat:P/Q or quad:(P+Q*sqrt(D))/R)");
}

DigitLiteral parse_digit_literal(const std::string& text) {
    auto [digits, period] = parse_bracket_lists(text, "digit literal");
    for (const auto& list : {digits, period})
        for (const Int& d : list)
            if (d < 0)
                throw Error(ErrorCode::ParseError, "cli", "parse",
                            "expansion digits must be >= 0");
    return DigitLiteral{std::move(digits), std::move(period)};
}

}  // namespace ostrowski
