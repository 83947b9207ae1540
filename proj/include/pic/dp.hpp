#pragma once

#include <limits>
#include <optional>

#include "pic/branching.hpp"
#include "pic/result.hpp"
#include "pic/sections.hpp"

namespace pic {

inline constexpr int kJumpInfinity = std::numeric_limits<int>::max();

// Placeholder for u(s) when z(s) lands on r2: the vertex at that position is
// outside everything the state knows about, so it carries no information.
inline constexpr int kChainEnd = -1;

// The instance extended with two guard vertices in front (alpha2, alpha1) and
// three behind (omega1..omega3), so that the table of the outer dynamic
// program has well-defined boundary tuples. Vertex ids: originals keep
// 0..n-1, then alpha1 = n, alpha2 = n+1, omega1 = n+2, omega2 = n+3,
// omega3 = n+4. Positions are shifted by 2 to stay 1-based: originals occupy
// 3..n+2, the guards get the singleton sets {1}, {2}, {n+3}, {n+4}, {n+5}.
// The guards are kept non-adjacent to the originals and their seam position
// pairs are left out of the allowed graph, so no window and no forced pair
// ever crosses between guards and originals.
struct AugmentedInstance {
    SpicInstance base;
    int a1 = -1, a2 = -1, o1 = -1, o2 = -1, o3 = -1;
    int original_n = 0;

    // tie-break order: alpha2, alpha1, originals ascending, omega1..omega3
    TieBreaker tie_breaker() const;
};

AugmentedInstance augment(const SpicInstance& inst);

// Drops the five guard vertices from a total ordering of the augmented
// instance and shifts positions back down by 2.
Ordering strip_augmentation(const AugmentedInstance& aug, const Ordering& full);

// Lifts a section family of the original instance: each set gains the two
// front guards, and {}, {alpha2}, {alpha2, alpha1} plus the two rear prefixes
// are added. Every proper prefix of the canonical augmented ordering appears
// here; the full vertex set does not, because omega3 is placed outside the
// table.
std::vector<Section> augment_sections(const AugmentedInstance& aug,
                                      const std::vector<Section>& sections);

// First position q > p whose vertex is non-adjacent to the vertex at p;
// kJumpInfinity when no such position exists.
int jump(const Graph& g_completed, const Ordering& ord, int p);

// A guessed jump set: everything before it (A), the set itself (X), and its
// internal placement onto positions |A|+1 .. |A|+|X|.
struct JumpTuple {
    Bits before;
    Bits block;
    Ordering block_ordering;

    int lo() const { return before.count() + 1; }          // first block position
    int hi() const { return before.count() + block.count(); }  // last block position

    bool operator==(const JumpTuple& o) const {
        return before == o.before && block == o.block &&
               block_ordering.pos == o.block_ordering.pos;
    }
};

// Reconstructs the placement of a block from neighborhood traces: vertices
// are quasi-ordered by (left neighborhood shrinks, right neighborhood grows)
// under the guessed incident edges, ties are broken by the lexicographically
// minimal matching against the position sets. Rejects (nullopt) when the
// quasi-order is not total or no matching exists.
std::optional<Ordering> deduce_block_ordering(const Bits& before, const Bits& block,
                                              const Completion& inc_edges,
                                              const SpicInstance& inst, const TieBreaker& tb);

// All jump tuples over pairs of sections whose block admits an ordering with
// few forced incident edges (at most 2*budget/tau). Contains the restriction
// of the canonical ordering to every cheap jump set. tb must match the order
// the dynamic program breaks ties with: interchangeable vertices (true twins
// with the same allowed positions) are emitted in tb order only, which any
// canonical ordering obeys.
std::vector<JumpTuple> enumerate_jump_family(const SpicInstance& inst,
                                             const std::vector<Section>& sections,
                                             const Threshold& tau, const TieBreaker& tb,
                                             CeilingCounter& ceiling, SolveStats& stats);

// Window geometry of a layer-one state (J1, J2): p = first block position,
// r = first position after the block. Pins fix u-values of chain levels whose
// z lands inside a known block; full2 = A2 union X2, required as the last B
// when z(s) = r2. Null pins leave the corresponding levels unconstrained.
// twins, when set, points at the twins_below sets of the instance; a free
// level vertex is only canonical once its tb-smaller twins sit below the cut.
struct ChainContext {
    int p1 = 1, r1 = 1, p2 = 1, r2 = 1;
    const Ordering* sx1 = nullptr;
    const Ordering* sx2 = nullptr;
    const Bits* a1 = nullptr;
    const Bits* a2 = nullptr;
    const Bits* full2 = nullptr;
    const std::vector<Bits>* twins = nullptr;
};

// A horizontal cut through the middle region: positions z(0) < ... < z(s)
// where consecutive jumps land, the vertices sitting at them, and the vertex
// sets before them.
struct Chain {
    std::vector<int> z;
    std::vector<int> u;
    std::vector<Bits> b;

    int s() const { return int(z.size()) - 1; }

    bool operator==(const Chain& o) const { return z == o.z && u == o.u && b == o.b; }
    bool operator<(const Chain& o) const {
        if (z != o.z) return z < o.z;
        if (u != o.u) return u < o.u;
        return b < o.b;
    }
};

// All chains over the section family satisfying the six chain axioms, with
// u-values pinned per the context. Contains every chain consistent with the
// canonical ordering.
std::vector<Chain> enumerate_chains(const SpicInstance& inst, const std::vector<Section>& sections,
                                    const Threshold& tau, const ChainContext& ctx,
                                    CeilingCounter& ceiling, SolveStats& stats);

// Inner dynamic program over pairs of chains; emits every computed value
// whose domain equals the layer-one domain (A2 union X2) minus A1. Cost of a
// candidate is measured against the state's thickened forced graph.
std::vector<Ordering> layer_two_dp(const SpicInstance& inst, const std::vector<Chain>& chains,
                                   const JumpTuple& j1, const JumpTuple& j2, const TieBreaker& tb,
                                   CeilingCounter& ceiling, SolveStats& stats);

// Outer dynamic program over pairs of jump tuples. Returns the full canonical
// ordering of the augmented instance, or nullopt when the endpoint tuples are
// missing, the table yields no value, or the best ordering exceeds the
// budget.
std::optional<Ordering> layer_one_dp(const AugmentedInstance& aug,
                                     const std::vector<JumpTuple>& family,
                                     const std::vector<Section>& sections, const Threshold& tau,
                                     const TieBreaker& tb, CeilingCounter& ceiling,
                                     SolveStats& stats);

}  // namespace pic
