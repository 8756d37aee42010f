#pragma once

#include "ostrowski/cfrac.hpp"
#include "ostrowski/ostrowski_abs.hpp"

namespace ostrowski {

// Parity: 1 for odd k, 0 for even k (= ceil(k/2) - floor(k/2)).
inline int parity(size_t k) { return static_cast<int>(k % 2); }

// Which condition set alt_validate enforces. The algorithm's own outputs
// satisfy the conditions established in the uniqueness proof
// (theorem-proof mode); full alpha-admissibility on top of them
// (definition mode) rejects some of those outputs, e.g. the all-ones
// sequence for the golden section.
enum class Strictness { TheoremProof, Definition };

struct AltDigits {
    Int c0{0};
    std::vector<Int> digits;  // c_1..c_N
    SeqIntent intent = SeqIntent::Finite;
    std::vector<Int> period;
    Strictness strictness = Strictness::TheoremProof;

    bool terminated() const { return intent == SeqIntent::Finite; }
};

struct AltTrace {
    std::vector<Real> residuals;  // gamma_k, exact mode
    std::vector<std::pair<Rational, Rational>> enclosures;
    std::vector<int> parities;  // rho(k) per emitted index
};

// Alternating expansion of gamma in (-alpha,1): c_k = min{ceil(gamma_{k-1}
// / theta_{k-1}), a_k} with signed theta. gamma = 0 yields the empty
// expansion. Every emitted residual is checked against the parity interval
// gamma_k in (-theta_{k-rho(k)}, -theta_{k-1+rho(k)}).
std::pair<AltDigits, AltTrace> alt_expand(const AlphaContext& ctx,
                                          const Real& gamma,
                                          size_t max_digits);

// Base-(-alpha) expansion of an arbitrary real: c0 = -floor(r) so that
// c0*theta_{-1} = floor(r); integers get the vacuous expansion l = 0.
std::pair<AltDigits, AltTrace> alt_expand_line(const AlphaContext& ctx,
                                               const Real& r,
                                               size_t max_digits);

// Theorem-proof mode: 0 <= c_k <= a_k not all zero; a zero digit at an
// interior position follows a maximal digit (c_{k+1} = 0 => c_k = a_k);
// finite sequences end with c_l >= 1; infinite sequences need c_k >= 1 at
// infinitely many odd and even k (decided only under a period argument).
// Definition mode additionally demands full alpha-admissibility.
Verdict alt_validate(const CFExpansion& cf, const AltDigits& digits,
                     Strictness strictness);

// Partial sum -c0 + sum_{k<=N} c_k theta_{k-1}; the true value lies within
// |theta_{N-1}| + |theta_N| of it on either side.
EvalResult alt_evaluate(const AlphaContext& ctx, const AltDigits& digits,
                        size_t depth);

}  // namespace ostrowski
