#pragma once

#include "ostrowski/cfrac.hpp"
#include "ostrowski/oracle.hpp"
#include "ostrowski/ostrowski_abs.hpp"
#include "ostrowski/ostrowski_alt.hpp"

#include <json.hpp>

#include <string>

namespace ostrowski {

// All emission goes through ordered_json with integers rendered as decimal
// strings, so output is unbounded-safe and byte-identical across runs.
using Json = nlohmann::ordered_json;

Json int_json(const Int& n);
Json digits_json(const std::vector<Int>& digits);
Json real_json(const Real& x, unsigned precision = 50);
Json alpha_json(const AlphaSpec& spec, unsigned precision = 50);
Json cf_json(const CFExpansion& cf);
Json convergents_json(const Convergents& conv);
Json theta_json(const ThetaView& view, unsigned precision = 50);
Json identities_json(const AlphaSpec& alpha, const IdentityReport& report,
                     unsigned precision = 50);

// {"variant":"absolute","alpha":...,"b0":...,"digits":[...],
//  "terminated":...,"residual_bound":...}
Json abs_expansion_json(const AlphaSpec& alpha, const AlphaContext& ctx,
                        const AbsDigits& digits, unsigned precision = 50);
// Alternating layout adds "c0" and "strictness".
Json alt_expansion_json(const AlphaSpec& alpha, const AlphaContext& ctx,
                        const AltDigits& digits, unsigned precision = 50);

Json eval_json(const AlphaSpec& alpha, const EvalResult& result,
               const char* variant, unsigned precision = 50);
Json verdict_json(const Verdict& verdict);
Json report_json(const EnumerationReport& report);
Json error_json(const Error& err);

const char* strictness_name(Strictness s);

// Upper bound |theta_{N-1}| + |theta_N| on the mass past N digits.
std::string residual_bound_decimal(const AlphaContext& ctx, size_t n,
                                   unsigned precision = 50);

// Lightweight fixed-order table rendering of any emitted object.
std::string render_table(const Json& j);

}  // namespace ostrowski
