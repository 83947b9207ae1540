#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pic/bits.hpp"

namespace pic {

using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitsets.
struct Graph {
    int n = 0;
    std::vector<Bits> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bits(n_)) {}

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n && v < n);
        adj[u].set(v);
        adj[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj[u].reset(v);
        adj[v].reset(u);
    }
    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return adj[u].test(v);
    }
    int degree(int v) const { return adj[v].count(); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            adj[u].for_each([&](int v) { if (u < v) out.emplace_back(u, v); });
        return out;
    }

    Bits closed_neighborhood(int v) const {
        Bits b = adj[v];
        b.set(v);
        return b;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

    // vertex sets of connected components, each sorted, ordered by smallest member
    std::vector<std::vector<int>> components() const;

    // subgraph induced on `verts` (which need not be sorted); vertex i of the
    // result is verts[i]
    Graph induced(const std::vector<int>& verts) const;
};

// Reads the edge-list format: first meaningful line "n m", then m lines
// "u v" with 0 <= u < v < n. Blank lines and lines starting with '#' are
// skipped. Throws std::runtime_error on malformed input, duplicate edges,
// or out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g);

}  // namespace pic
