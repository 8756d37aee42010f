#pragma once

#include "ostrowski/cfrac.hpp"
#include "ostrowski/ostrowski_abs.hpp"
#include "ostrowski/ostrowski_alt.hpp"

#include <string>
#include <vector>

namespace ostrowski {

struct OracleConfig {
    size_t depth_cap = 12;
    size_t sequence_budget = 1000000;
};

// Certification record for the uniqueness theorems at desk scale. Counts
// are exact; any duplicate value, range violation or round-trip mismatch
// carries a reproducible witness (full digit string and exact value).
struct EnumerationReport {
    std::string alpha;
    std::string variant;  // "absolute" | "alternating"
    size_t depth = 0;
    Strictness strictness = Strictness::TheoremProof;
    size_t count = 0;
    std::string min_value, max_value;  // decimal renderings

    struct Duplicate {
        std::string digits_a, digits_b;
        std::string value;
    };
    struct RoundTripFailure {
        std::string digits, recovered, value;
    };
    struct RangeViolation {
        std::string digits, value;
    };
    std::vector<Duplicate> duplicates;
    std::vector<RoundTripFailure> round_trip_failures;
    std::vector<RangeViolation> range_violations;

    bool pass() const {
        return duplicates.empty() && round_trip_failures.empty() &&
               range_violations.empty();
    }
};

// All nonempty finite alpha-admissible sequences of length <= depth (final
// digit >= 1, zero-padded Markov conditions), in lexicographic order.
std::vector<AbsDigits> enumerate_abs(const CFExpansion& cf, size_t depth,
                                     const OracleConfig& config = {});

// All finite sequences of length <= depth passing alt_validate under the
// given strictness, including the empty expansion of zero.
std::vector<AltDigits> enumerate_alt(const CFExpansion& cf, size_t depth,
                                     Strictness strictness,
                                     const OracleConfig& config = {});

// Evaluates every enumerated sequence exactly, checks pairwise distinctness
// and the range (0,1), and recovers each sequence digit-for-digit with
// abs_expand from its exact value. Exact mode only.
EnumerationReport certify_uniqueness_abs(const AlphaContext& ctx, size_t depth,
                                         const OracleConfig& config = {});

// Alternating analog with range (-alpha, 1) and alt_expand recovery.
EnumerationReport certify_uniqueness_alt(const AlphaContext& ctx, size_t depth,
                                         Strictness strictness,
                                         const OracleConfig& config = {});

std::string digits_to_string(const std::vector<Int>& digits);

}  // namespace ostrowski
