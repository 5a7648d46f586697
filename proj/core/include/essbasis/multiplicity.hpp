#pragma once

#include <map>
#include <utility>
#include <vector>

#include "essbasis/root_system.hpp"

namespace essbasis {

// dim V(lambda) by Weyl's dimension formula. lambda must be dominant.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

/**
 * All weights of V(lambda) with their multiplicities, keyed by
 * delta = lambda - mu in simple-root coordinates. Computed with the
 * Freudenthal recursion in exact integer arithmetic.
 */
std::map<IVec, Int> weight_multiplicities_by_delta(const RootSystem& rs, const Weight& lambda);

// Same data keyed by the weight mu itself (fw coordinates).
std::map<Weight, Int> freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda);

// All unordered pairs of nonzero dominant weights summing to lambda.
std::vector<std::pair<Weight, Weight>> dominant_decompositions(const Weight& lambda);

}  // namespace essbasis
