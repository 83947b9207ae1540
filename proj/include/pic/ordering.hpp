#pragma once

#include <vector>

#include "pic/graph.hpp"

namespace pic {

// Partial injective placement of vertices into positions 1..n (0 = vertex not
// placed). Everything downstream treats positions as 1-based, matching the
// usual interval-ordering convention; slot 0 never holds a vertex.
struct Ordering {
    std::vector<int> pos;  // pos[v] = position of v, or 0

    Ordering() = default;
    explicit Ordering(int n) : pos(n, 0) {}

    int n_vertices() const { return int(pos.size()); }
    bool contains(int v) const { return pos[v] != 0; }
    int position(int v) const { assert(pos[v] != 0); return pos[v]; }

    void place(int v, int p) {
        assert(p >= 1 && pos[v] == 0);
        pos[v] = p;
    }

    int domain_size() const {
        int c = 0;
        for (int p : pos) c += (p != 0);
        return c;
    }
    bool is_total() const { return domain_size() == n_vertices(); }

    Bits domain() const {
        Bits b(n_vertices());
        for (int v = 0; v < n_vertices(); ++v)
            if (pos[v]) b.set(v);
        return b;
    }

    // vertices of the domain sorted by position
    std::vector<int> sequence() const;

    // vertex sitting at position p, or -1
    int vertex_at(int p) const {
        for (int v = 0; v < n_vertices(); ++v)
            if (pos[v] == p) return v;
        return -1;
    }

    // total ordering from "vertex at position 1, at 2, ..." style input
    static Ordering from_sequence(int n, const std::vector<int>& seq);

    bool operator==(const Ordering& o) const { return pos == o.pos; }
    bool operator!=(const Ordering& o) const { return pos != o.pos; }
};

// Fixed reference order used for every lexicographic decision. base(n) is
// ascending vertex id; the DP augmentation builds a custom one.
struct TieBreaker {
    std::vector<int> order;  // vertices, most significant first
    std::vector<int> rank;   // rank[v] = index of v in order

    static TieBreaker base(int n);
    static TieBreaker from_order(const std::vector<int>& order);
};

// set of edges added to a graph; kept sorted, each pair with first < second
struct Completion {
    std::vector<Edge> edges;

    void normalize();
    int size() const { return int(edges.size()); }
    bool operator==(const Completion& o) const { return edges == o.edges; }
};

// True iff ord is a total ordering of g's vertices in which every closed
// neighborhood occupies a consecutive block of positions (equivalent to the
// three-vertex umbrella condition, but checkable in linear time).
bool has_umbrella_property(const Graph& g, const Ordering& ord);

// Image of g under ord: graph on positions (as vertices p-1), keeping exactly
// the edges of g between placed vertices.
Graph induced_graph(const Graph& g, const Ordering& ord);

// Lexicographic comparison of two orderings with equal domain: walk the
// tie-break order, compare positions of the first placed vertex where they
// differ. Returns -1, 0 or 1. Throws std::logic_error on domain mismatch --
// that is always a caller bug.
int lex_compare(const Ordering& a, const Ordering& b, const TieBreaker& tb);

}  // namespace pic
