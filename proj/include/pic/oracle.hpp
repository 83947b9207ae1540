#pragma once

#include "pic/result.hpp"
#include "pic/spic.hpp"

namespace pic {

// How many vertices the permutation oracle is willing to chew through.
inline constexpr int kBruteforceLimit = 9;

// Exhaustive reference solver: walks every total placement in ascending lex
// order and keeps the first minimum-cost feasible one, so the answer is the
// canonical solution by construction. Refuses instances above
// kBruteforceLimit vertices instead of hanging.
SolveResult solve_bruteforce(const SpicInstance& inst, const TieBreaker& tb);

// Forbidden-structure branching baseline for the plain completion problem:
// repeatedly find an induced claw / net / tent / hole and branch on the ways
// a completion can break it (for holes: the triangulations of the cycle).
// Explores every minimum completion, then picks the canonical ordering among
// them. No subexponential guarantee, but independent of the main pipeline.
SolveResult solve_baseline(const Graph& g, int k, const TieBreaker& tb);

// Checks that `completion` is disjoint from E(g) and duplicate-free (throws
// std::invalid_argument otherwise), fits the budget, and makes g proper
// interval.
bool verify_solution(const Graph& g, const Completion& completion, int k);

}  // namespace pic
