#include "pic/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace pic {

std::vector<int> Ordering::sequence() const {
    std::vector<std::pair<int, int>> ps;
    for (int v = 0; v < n_vertices(); ++v)
        if (pos[v]) ps.emplace_back(pos[v], v);
    std::sort(ps.begin(), ps.end());
    std::vector<int> out;
    out.reserve(ps.size());
    for (auto& [p, v] : ps) out.push_back(v);
    return out;
}

Ordering Ordering::from_sequence(int n, const std::vector<int>& seq) {
    Ordering ord(n);
    for (int i = 0; i < int(seq.size()); ++i) ord.place(seq[i], i + 1);
    return ord;
}

TieBreaker TieBreaker::base(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return from_order(order);
}

TieBreaker TieBreaker::from_order(const std::vector<int>& order) {
    TieBreaker tb;
    tb.order = order;
    tb.rank.assign(order.size(), -1);
    for (int i = 0; i < int(order.size()); ++i) {
        assert(order[i] >= 0 && order[i] < int(order.size()) && tb.rank[order[i]] == -1);
        tb.rank[order[i]] = i;
    }
    return tb;
}

void Completion::normalize() {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool has_umbrella_property(const Graph& g, const Ordering& ord) {
    assert(ord.n_vertices() == g.n && ord.is_total());
    // closed neighborhoods must fill exactly [min pos, max pos]
    for (int v = 0; v < g.n; ++v) {
        int lo = ord.pos[v], hi = ord.pos[v];
        g.adj[v].for_each([&](int u) {
            lo = std::min(lo, ord.pos[u]);
            hi = std::max(hi, ord.pos[u]);
        });
        if (hi - lo != g.degree(v)) return false;
    }
    return true;
}

Graph induced_graph(const Graph& g, const Ordering& ord) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u) {
        if (!ord.pos[u]) continue;
        g.adj[u].for_each([&](int v) {
            if (u < v && ord.pos[v]) h.add_edge(ord.pos[u] - 1, ord.pos[v] - 1);
        });
    }
    return h;
}

int lex_compare(const Ordering& a, const Ordering& b, const TieBreaker& tb) {
    if (a.n_vertices() != b.n_vertices())
        throw std::logic_error("lex_compare: orderings over different vertex sets");
    for (int v : tb.order) {
        if (a.contains(v) != b.contains(v))
            throw std::logic_error("lex_compare: domain mismatch");
        if (!a.contains(v)) continue;
        if (a.pos[v] != b.pos[v]) return a.pos[v] < b.pos[v] ? -1 : 1;
    }
    return 0;
}

}  // namespace pic
