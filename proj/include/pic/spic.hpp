#pragma once

#include <optional>

#include "pic/ordering.hpp"

namespace pic {

// Sandwich-constrained completion instance. Positions are 1..g.n; `down` and
// `up` are graphs on those positions (vertex p-1 stands for position p) and
// both must be proper interval with the identity ordering as umbrella
// ordering, with E(down) ⊆ E(up). sigma[v] is the set of positions v may
// take, stored as bits over 0..n-1 (bit p-1 = position p allowed).
//
// The plain completion problem is the trivial sandwich: all positions
// allowed, empty `down`, complete `up`.
struct SpicInstance {
    Graph g;
    int budget = 0;
    std::vector<Bits> sigma;
    Graph down, up;

    static SpicInstance trivial(const Graph& g, int budget);

    int n() const { return g.n; }
    bool position_allowed(int v, int p) const { return sigma[v].test(p - 1); }

    // throws std::invalid_argument if the sandwich invariants fail
    void validate() const;
};

struct FeasibilityReport {
    bool feasible = true;
    int violating_vertex = -1;   // first vertex outside its allowed set
    Edge violating_pair{-1, -1}; // first g-edge mapped onto a non-edge of `up`
};

// ord may be partial; checks position sets and that every g-edge inside the
// domain lands on an edge of `up`.
FeasibilityReport is_feasible(const SpicInstance& inst, const Ordering& ord);

// Pairs the ordering forces: non-edges of g inside the domain whose positions
// either carry a `down`-edge or lie under some g-edge of the domain (both
// endpoints between the edge's endpoints' positions, inclusive). This is the
// unique inclusion-minimal completion for ord. Throws std::invalid_argument
// if ord is infeasible.
Completion minimal_completion(const SpicInstance& inst, const Ordering& ord);

// |minimal_completion|, same precondition
int cost(const SpicInstance& inst, const Ordering& ord);

// Feasibility check and forced-pair count rolled into one pass: the size of
// the minimal completion, or nullopt when ord is infeasible. The inner loops
// of the dynamic programs live on this.
std::optional<int> completion_cost(const SpicInstance& inst, const Ordering& ord);

// Minimum-cost, then lexicographically minimal (per tb) total feasible
// ordering with cost <= inst.budget; nullopt when none exists. Plain
// enumeration in ascending lex order -- exponential, callers keep n small.
std::optional<Ordering> canonical_solution(const SpicInstance& inst, const TieBreaker& tb);

// Swapping two vertices with the same neighborhood (closed when adjacent,
// open when not) and the same allowed positions changes neither feasibility
// nor cost, so the canonical ordering keeps each such pair in tb order. The
// returned sets hold, per vertex, the tb-smaller partners; enumerations may
// insist those land first.
std::vector<Bits> twins_below(const SpicInstance& inst, const TieBreaker& tb);

// Perfect matching of xs into ys minimizing the assignment sequence
// lexicographically in xs order (ys values compared by their index order).
// allowed[i] holds the usable ys indices for xs slot i. Returns, for each xs
// index, the chosen ys index; nullopt when no perfect matching exists.
std::optional<std::vector<int>> lex_min_matching(int n_xs, int n_ys,
                                                 const std::vector<Bits>& allowed);

}  // namespace pic
