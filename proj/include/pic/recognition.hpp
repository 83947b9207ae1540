#pragma once

#include <optional>

#include "pic/ordering.hpp"

namespace pic {

struct ForbiddenStructure {
    enum class Kind { claw, net, tent, hole };
    Kind kind;
    // claw: center, then the three pairwise non-adjacent leaves.
    // net:  triangle a b c, then pendants a' b' c' (a' attached to a, ...).
    // tent: triangle a b c, then x adj {a,b}, y adj {b,c}, z adj {c,a}.
    // hole: the chordless cycle in cyclic order, length >= 4.
    std::vector<int> vertices;
};

const char* kind_name(ForbiddenStructure::Kind k);

struct RecognitionResult {
    bool proper_interval = false;
    std::optional<Ordering> canonical;          // present iff proper_interval
    std::optional<ForbiddenStructure> witness;  // present iff not
};

// Three LBFS sweeps per component, umbrella check on the last; on failure the
// witness comes from find_forbidden_structure.
RecognitionResult recognize(const Graph& g, const TieBreaker& tb);

// Some induced claw / net / tent / chordless >= 4 cycle, or nullopt exactly
// when g is proper interval.
std::optional<ForbiddenStructure> find_forbidden_structure(const Graph& g);

// Lexicographically minimal umbrella ordering of a proper interval graph:
// connected components in ascending order of their best tie-break rank, each
// component's ordering minimal among its (reversal x twin-permutation)
// variants. Throws std::invalid_argument when g is not proper interval.
Ordering canonical_umbrella_ordering(const Graph& g, const TieBreaker& tb);

// true-twin classes (equal closed neighborhoods), each sorted, ordered by
// smallest member
std::vector<std::vector<int>> twin_classes(const Graph& g);

}  // namespace pic
