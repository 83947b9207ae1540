#include "pic/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pic {

const char* kind_name(ForbiddenStructure::Kind k) {
    switch (k) {
        case ForbiddenStructure::Kind::claw: return "claw";
        case ForbiddenStructure::Kind::net: return "net";
        case ForbiddenStructure::Kind::tent: return "tent";
        case ForbiddenStructure::Kind::hole: return "hole";
    }
    return "?";
}

namespace {

// One lexicographic BFS sweep. Ties (equal labels) go to the vertex with the
// highest prev_rank, so passing the previous sweep's positions makes this the
// "+" variant; the sweep also starts at the prev_rank maximum.
std::vector<int> lbfs_sweep(const Graph& g, const std::vector<int>& prev_rank) {
    int n = g.n;
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (pick < 0 || label[v] > label[pick] ||
                (label[v] == label[pick] && prev_rank[v] > prev_rank[pick]))
                pick = v;
        }
        visited[pick] = 1;
        order.push_back(pick);
        g.adj[pick].for_each([&](int u) {
            if (!visited[u]) label[u].push_back(n - step);  // stays descending
        });
    }
    return order;
}

// umbrella ordering of a connected proper interval graph via Corneil's
// 3-sweep scheme; empty when the component is not proper interval
std::optional<Ordering> sweep_ordering(const Graph& h) {
    int n = h.n;
    std::vector<int> rank0(n);
    for (int v = 0; v < n; ++v) rank0[v] = n - 1 - v;  // deterministic start at 0
    auto s1 = lbfs_sweep(h, rank0);
    std::vector<int> r1(n), r2(n);
    for (int i = 0; i < n; ++i) r1[s1[i]] = i;
    auto s2 = lbfs_sweep(h, r1);
    for (int i = 0; i < n; ++i) r2[s2[i]] = i;
    auto s3 = lbfs_sweep(h, r2);
    Ordering ord = Ordering::from_sequence(n, s3);
    if (!has_umbrella_property(h, ord)) return std::nullopt;
    return ord;
}

}  // namespace

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> done(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (done[v]) continue;
        std::vector<int> cls{v};
        done[v] = 1;
        Bits nv = g.closed_neighborhood(v);
        for (int u = v + 1; u < g.n; ++u)
            if (!done[u] && g.closed_neighborhood(u) == nv) {
                cls.push_back(u);
                done[u] = 1;
            }
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

// canonical ordering of one connected component, local vertex ids, local
// tie-break = ascending local id (callers relabel by tb rank)
std::optional<Ordering> component_canonical(const Graph& h) {
    auto sweep = sweep_ordering(h);
    if (!sweep) return std::nullopt;
    auto seq = sweep->sequence();

    // group the sequence into twin blocks (classes are consecutive in any
    // umbrella ordering), emit blocks sorted ascending inside
    auto blocks_of = [&](const std::vector<int>& s) {
        std::vector<std::vector<int>> blocks;
        size_t i = 0;
        while (i < s.size()) {
            Bits ni = h.closed_neighborhood(s[i]);
            size_t j = i + 1;
            while (j < s.size() && h.closed_neighborhood(s[j]) == ni) ++j;
            std::vector<int> blk(s.begin() + i, s.begin() + j);
            std::sort(blk.begin(), blk.end());
            blocks.push_back(std::move(blk));
            i = j;
        }
        return blocks;
    };

    auto assemble = [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<int> s;
        for (auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
        return Ordering::from_sequence(h.n, s);
    };

    auto fwd_blocks = blocks_of(seq);
    std::reverse(seq.begin(), seq.end());
    auto rev_blocks = blocks_of(seq);

    Ordering fwd = assemble(fwd_blocks), rev = assemble(rev_blocks);
    assert(has_umbrella_property(h, fwd) && has_umbrella_property(h, rev));
    TieBreaker local = TieBreaker::base(h.n);
    return lex_compare(fwd, rev, local) <= 0 ? fwd : rev;
}

}  // namespace

Ordering canonical_umbrella_ordering(const Graph& g, const TieBreaker& tb) {
    // relabel so that the tie-break order becomes ascending id, work there,
    // then map back; keeps all the lexicographic reasoning in one convention
    auto comps = g.components();
    // component order: ascending best tie-break rank
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        int ra = g.n, rb = g.n;
        for (int v : a) ra = std::min(ra, tb.rank[v]);
        for (int v : b) rb = std::min(rb, tb.rank[v]);
        return ra < rb;
    });

    Ordering out(g.n);
    int offset = 0;
    for (auto& comp : comps) {
        std::vector<int> local(comp);  // local id -> original vertex
        std::sort(local.begin(), local.end(),
                  [&](int a, int b) { return tb.rank[a] < tb.rank[b]; });
        Graph h = g.induced(local);
        auto canon = component_canonical(h);
        if (!canon) throw std::invalid_argument("canonical_umbrella_ordering: not a proper interval graph");
        for (int i = 0; i < h.n; ++i) out.pos[local[i]] = offset + canon->pos[i];
        offset += h.n;
    }
    return out;
}

RecognitionResult recognize(const Graph& g, const TieBreaker& tb) {
    RecognitionResult res;
    for (auto& comp : g.components()) {
        if (!sweep_ordering(g.induced(comp))) {
            res.proper_interval = false;
            res.witness = find_forbidden_structure(g);
            assert(res.witness);
            return res;
        }
    }
    res.proper_interval = true;
    res.canonical = canonical_umbrella_ordering(g, tb);
    return res;
}

namespace {

std::optional<ForbiddenStructure> find_claw(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        auto nb = g.adj[v].members();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (size_t l = j + 1; l < nb.size(); ++l) {
                    if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
                    return ForbiddenStructure{ForbiddenStructure::Kind::claw,
                                              {v, nb[i], nb[j], nb[l]}};
                }
            }
    }
    return std::nullopt;
}

// Any chordless cycle of length >= 4 shows up as: two non-adjacent neighbors
// x,y of some v joined by a path avoiding the rest of N[v]. A shortest such
// path has no internal chords (it lives in an induced subgraph) and its
// interior avoids N[v], so path + v is chordless. Conversely a hole
// c1 c2 ... cl gives v=c1, x=c2, y=cl with exactly such a path, so scanning
// all triples finds a hole iff one exists.
std::optional<ForbiddenStructure> find_hole(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        auto nb = g.adj[v].members();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.has_edge(x, y)) continue;
                Bits banned = g.adj[v];
                banned.set(v);
                banned.reset(x);
                banned.reset(y);
                std::vector<int> par(g.n, -2);
                std::vector<int> queue{x};
                par[x] = -1;
                for (size_t q = 0; q < queue.size() && par[y] == -2; ++q) {
                    int cur = queue[q];
                    g.adj[cur].for_each([&](int w) {
                        if (par[w] == -2 && !banned.test(w)) {
                            par[w] = cur;
                            queue.push_back(w);
                        }
                    });
                }
                if (par[y] == -2) continue;
                std::vector<int> cycle{v};
                for (int w = y; w != -1; w = par[w]) cycle.push_back(w);
                return ForbiddenStructure{ForbiddenStructure::Kind::hole, cycle};
            }
    }
    return std::nullopt;
}

std::optional<ForbiddenStructure> find_sun_like(const Graph& g, bool tent) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                // candidate attachments for each triangle slot
                std::vector<int> xs, ys, zs;
                for (int x = 0; x < g.n; ++x) {
                    if (x == a || x == b || x == c) continue;
                    bool ea = g.has_edge(x, a), eb = g.has_edge(x, b), ec = g.has_edge(x, c);
                    if (tent) {
                        if (ea && eb && !ec) xs.push_back(x);
                        if (eb && ec && !ea) ys.push_back(x);
                        if (ec && ea && !eb) zs.push_back(x);
                    } else {
                        if (ea && !eb && !ec) xs.push_back(x);
                        if (eb && !ea && !ec) ys.push_back(x);
                        if (ec && !ea && !eb) zs.push_back(x);
                    }
                }
                for (int x : xs)
                    for (int y : ys) {
                        if (x == y || g.has_edge(x, y)) continue;
                        for (int z : zs) {
                            if (z == x || z == y || g.has_edge(z, x) || g.has_edge(z, y))
                                continue;
                            auto kind = tent ? ForbiddenStructure::Kind::tent
                                             : ForbiddenStructure::Kind::net;
                            return ForbiddenStructure{kind, {a, b, c, x, y, z}};
                        }
                    }
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<ForbiddenStructure> find_forbidden_structure(const Graph& g) {
    if (auto w = find_claw(g)) return w;
    if (auto w = find_hole(g)) return w;
    if (auto w = find_sun_like(g, true)) return w;
    if (auto w = find_sun_like(g, false)) return w;
    return std::nullopt;
}

}  // namespace pic
