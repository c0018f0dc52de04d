#pragma once

#include <cstdint>
#include <string>

namespace ddlab {

// Randomized verification of the two R^4 intersection bounds: curve/2-flat
// counts and curve/curve counts stay <= 4, scalar-multiple pairs intersect
// in exactly 0 points, no degenerate eliminations occur under the |p| != |q|
// hypothesis, and every reported witness satisfies the defining equations to
// 1e-12.
struct R4VerifySummary {
    std::size_t flat_trials = 0, pair_trials = 0, scalar_trials = 0;
    int max_flat_count = 0;
    int max_pair_count = 0;
    std::size_t degenerate_results = 0;
    std::size_t flat_violations = 0;
    std::size_t pair_violations = 0;
    std::size_t scalar_violations = 0;
    std::size_t witness_violations = 0;

    bool ok() const {
        return degenerate_results == 0 && flat_violations == 0 && pair_violations == 0 &&
               scalar_violations == 0 && witness_violations == 0;
    }
    std::string str() const;
};

R4VerifySummary r4_verify(std::size_t trials, std::uint64_t seed);

}  // namespace ddlab
