#pragma once

#include "pic/dp.hpp"
#include "pic/result.hpp"

namespace pic {

// Default tick budget for each enumeration pass. One tick is one guess or DP
// step looked at, so this is minutes of work at the very worst.
inline constexpr long long kDefaultCeiling = 50'000'000;

struct SolveOptions {
    int budget = 0;
    int tau_override = -1;  // -1: derive the threshold from the budget
    long long ceiling = kDefaultCeiling;
    int jobs = 1;
};

// The full pipeline: per connected component, guess the expensive vertices,
// enumerate candidate sections, and run the two-layer DP for every
// (first, last) endpoint pair, keeping the cheapest lexicographically
// smallest lifted ordering. Ceiling overruns surface as status refused, never
// as an exception.
SolveResult solve_fpt(const Graph& g, const SolveOptions& opt);

}  // namespace pic
