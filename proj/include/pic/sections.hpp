#pragma once

#include <optional>

#include "pic/branching.hpp"

namespace pic {

// A set that some optimal ordering of the branch instance maps onto the first
// |A| positions.
using Section = Bits;

// One guessed boundary configuration around a twin class Lambda of the
// completed graph: a in Lambda; c1/c2 = leftmost/rightmost vertex of
// N[Lambda]; b1/b2 = nearest vertices outside N[Lambda] on each side (-1 when
// the class touches the end of the ordering); inc_edges = the guessed
// completion edges incident to these vertices (at most tau per vertex, they
// are all cheap).
struct FiveGuess {
    int a = -1;
    int b1 = -1, b2 = -1;
    int c1 = -1, c2 = -1;
    std::vector<Edge> inc_edges;
};

struct NeighborClassification {
    bool ok = false;
    const char* reason = nullptr;  // set when !ok
    Bits before, inside, after;    // partition of N[a] under the guess
};

// Sorts every vertex of the guessed N[Lambda] to the left of, inside, or to
// the right of Lambda: N[b1]-members and N[c2]-non-members go before,
// N[b2]-members and N[c1]-non-members go after, contradictions kill the
// guess.
NeighborClassification classify_neighbors(const FiveGuess& guess, const Graph& h);

// Components of H minus the guessed N[Lambda] must sit entirely on one side
// of Lambda's position span. Each one is anchored by a G-neighbor that is
// either classified (before/after) or an expensive vertex (side read off its
// guessed position vs the span, both in original positions). Returns the full
// left vertex set, or nullopt when anchors are missing or disagree.
std::optional<Bits> resolve_component_sides(const BranchInstance& br, const Graph& g_full,
                                            const Bits& closed_nbhd, const Bits& before,
                                            const Bits& after, int span_lo, int span_hi);

// Lex-minimal placement of the class onto positions i..i+|cls|-1 respecting
// the instance's position sets; nullopt when no placement exists.
std::optional<Ordering> class_ordering_for(const Bits& cls, int i, const SpicInstance& inst,
                                           const TieBreaker& tb);

struct TwinTriple {
    Bits left;          // everything placed before the class
    Bits cls;           // the class itself
    Ordering class_ordering;  // partial, positions |left|+1 .. |left|+|cls|

    bool operator==(const TwinTriple& o) const {
        return left == o.left && cls == o.cls && class_ordering == o.class_ordering;
    }
    bool operator<(const TwinTriple& o) const {
        if (!(left == o.left)) return left < o.left;
        if (!(cls == o.cls)) return cls < o.cls;
        return class_ordering.pos < o.class_ordering.pos;
    }
};

// All (left set, twin class, class placement) triples the five-vertex guesses
// admit. Covers every twin class of the completed graph in the correct
// branch.
std::vector<TwinTriple> enumerate_twin_triples(const BranchInstance& br, const Graph& g_full,
                                               const Threshold& tau, const TieBreaker& tb,
                                               CeilingCounter& ceiling);

// Candidate consistent sections: every prefix cut through a twin triple, plus
// the full vertex set. Sorted by (size, bits) and deduplicated.
std::vector<Section> enumerate_sections(const BranchInstance& br,
                                        const std::vector<TwinTriple>& triples);

}  // namespace pic
