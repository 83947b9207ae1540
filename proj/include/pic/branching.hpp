#pragma once

#include <optional>

#include "pic/ceiling.hpp"
#include "pic/spic.hpp"

namespace pic {

struct Threshold {
    int value = 0;  // per-vertex incident-completion-edge bound
};

// smallest integer t >= 0 with t^3 >= 2k
Threshold compute_threshold(int k);

// One guessed set of expensive vertices with, for each, its position, and the
// leftmost/rightmost positions of its closed neighborhood in the completed
// ordering. Parallel arrays, verts ascending.
struct ExpensiveGuess {
    std::vector<int> verts;
    std::vector<int> p, pl, pr;

    int size() const { return int(verts.size()); }
};

struct BranchInstance {
    SpicInstance spic;                          // instance on the cheap vertices
    int original_n = 0;
    std::vector<int> h_verts;                   // spic-local vertex -> original vertex
    std::vector<int> pos_map;                   // spic position i (1-based) -> original position
    std::vector<std::pair<int, int>> sigma_dollar;  // (expensive vertex, its original position)
    std::vector<Edge> f_dollar;                 // completion edges forced inside the guess
    int cost_offset = 0;                        // c_$: cost the guess itself accounts for
    ExpensiveGuess guess;
};

// Builds the sandwich instance for one guess, or nullopt when a cleanup rule
// rejects it (the rule's name lands in *why if given). k is the overall
// budget; the returned instance's budget is k - cost_offset.
std::optional<BranchInstance> build_sandwich(const ExpensiveGuess& guess, const Graph& g,
                                             int k, std::string* why = nullptr);

// Every surviving branch for the given budget and threshold, the empty guess
// (trivial sandwich) first, then ascending |V_$| / lexicographic guess order.
// g must be connected. Throws CeilingExceeded via `ceiling` once too many
// raw guesses have been generated.
std::vector<BranchInstance> enumerate_branches(const Graph& g, int k, const Threshold& tau,
                                               CeilingCounter& ceiling);

// Glue a solved sub-ordering back together with the guessed positions; ord_h
// must be total on the branch instance.
Ordering lift_solution(const BranchInstance& branch, const Ordering& ord_h);

}  // namespace pic
