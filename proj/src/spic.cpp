#include "pic/spic.hpp"

#include <algorithm>
#include <stdexcept>

namespace pic {

SpicInstance SpicInstance::trivial(const Graph& g, int budget) {
    SpicInstance inst;
    inst.g = g;
    inst.budget = budget;
    Bits all(g.n);
    for (int p = 0; p < g.n; ++p) all.set(p);
    inst.sigma.assign(g.n, all);
    inst.down = Graph(g.n);
    inst.up = Graph(g.n);
    for (int p = 0; p < g.n; ++p)
        for (int q = p + 1; q < g.n; ++q) inst.up.add_edge(p, q);
    return inst;
}

void SpicInstance::validate() const {
    if (int(sigma.size()) != g.n || down.n != g.n || up.n != g.n)
        throw std::invalid_argument("spic instance: size mismatch");
    Ordering id(g.n);
    for (int v = 0; v < g.n; ++v) id.place(v, v + 1);
    if (!has_umbrella_property(down, id))
        throw std::invalid_argument("spic instance: lower sandwich graph not umbrella-ordered");
    if (!has_umbrella_property(up, id))
        throw std::invalid_argument("spic instance: upper sandwich graph not umbrella-ordered");
    for (int p = 0; p < g.n; ++p)
        if (!down.adj[p].subset_of(up.adj[p]))
            throw std::invalid_argument("spic instance: lower graph not contained in upper");
}

FeasibilityReport is_feasible(const SpicInstance& inst, const Ordering& ord) {
    FeasibilityReport rep;
    for (int v = 0; v < inst.g.n; ++v) {
        if (!ord.pos[v]) continue;
        if (!inst.position_allowed(v, ord.pos[v])) {
            rep.feasible = false;
            rep.violating_vertex = v;
            return rep;
        }
    }
    for (int u = 0; u < inst.g.n; ++u) {
        if (!ord.pos[u]) continue;
        bool bad = false;
        inst.g.adj[u].for_each([&](int v) {
            if (bad || u > v || !ord.pos[v]) return;
            if (!inst.up.has_edge(ord.pos[u] - 1, ord.pos[v] - 1)) {
                rep.feasible = false;
                rep.violating_pair = {u, v};
                bad = true;
            }
        });
        if (bad) return rep;
    }
    return rep;
}

namespace {

// forced pairs of a (possibly partial) feasible ordering, as vertex pairs
std::vector<Edge> forced_pairs(const SpicInstance& inst, const Ordering& ord) {
    int n = inst.g.n;
    // reach[p] = rightmost position a domain edge starting at <= p can cover
    std::vector<int> reach(n + 2, 0);
    for (int u = 0; u < n; ++u) {
        if (!ord.pos[u]) continue;
        int r = 0;
        inst.g.adj[u].for_each([&](int v) {
            if (ord.pos[v]) r = std::max(r, ord.pos[v]);
        });
        reach[ord.pos[u]] = std::max(reach[ord.pos[u]], r);
    }
    for (int p = 1; p <= n; ++p) reach[p] = std::max(reach[p], reach[p - 1]);

    auto verts = ord.sequence();
    std::vector<Edge> out;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int x = verts[i], y = verts[j];
            if (inst.g.has_edge(x, y)) continue;
            int p = ord.pos[x], q = ord.pos[y];
            if (reach[p] >= q || inst.down.has_edge(p - 1, q - 1))
                out.emplace_back(std::min(x, y), std::max(x, y));
        }
    }
    return out;
}

}  // namespace

Completion minimal_completion(const SpicInstance& inst, const Ordering& ord) {
    if (!is_feasible(inst, ord).feasible)
        throw std::invalid_argument("minimal_completion: ordering is infeasible");
    Completion c;
    c.edges = forced_pairs(inst, ord);
    c.normalize();
    return c;
}

int cost(const SpicInstance& inst, const Ordering& ord) {
    return minimal_completion(inst, ord).size();
}

std::optional<int> completion_cost(const SpicInstance& inst, const Ordering& ord) {
    int n = inst.g.n;
    std::vector<int> reach(n + 2, 0);
    for (int u = 0; u < n; ++u) {
        if (!ord.pos[u]) continue;
        if (!inst.position_allowed(u, ord.pos[u])) return std::nullopt;
        int r = 0;
        bool bad = false;
        inst.g.adj[u].for_each([&](int v) {
            if (bad || !ord.pos[v]) return;
            if (!inst.up.has_edge(ord.pos[u] - 1, ord.pos[v] - 1)) bad = true;
            r = std::max(r, ord.pos[v]);
        });
        if (bad) return std::nullopt;
        reach[ord.pos[u]] = std::max(reach[ord.pos[u]], r);
    }
    for (int p = 1; p <= n; ++p) reach[p] = std::max(reach[p], reach[p - 1]);

    int count = 0;
    for (int u = 0; u < n; ++u) {
        if (!ord.pos[u]) continue;
        for (int v = u + 1; v < n; ++v) {
            if (!ord.pos[v] || inst.g.has_edge(u, v)) continue;
            int p = std::min(ord.pos[u], ord.pos[v]);
            int q = std::max(ord.pos[u], ord.pos[v]);
            if (reach[p] >= q || inst.down.has_edge(p - 1, q - 1)) ++count;
        }
    }
    return count;
}

std::optional<Ordering> canonical_solution(const SpicInstance& inst, const TieBreaker& tb) {
    int n = inst.g.n;
    assert(int(tb.order.size()) == n);
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;

    std::optional<Ordering> best;
    int best_cost = inst.budget + 1;
    auto edges = inst.g.edges();
    do {
        Ordering ord(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int v = tb.order[i], p = vals[i];
            if (!inst.position_allowed(v, p)) ok = false;
            ord.pos[v] = p;
        }
        if (!ok) continue;
        for (auto& [u, v] : edges)
            if (!inst.up.has_edge(ord.pos[u] - 1, ord.pos[v] - 1)) { ok = false; break; }
        if (!ok) continue;
        int c = int(forced_pairs(inst, ord).size());
        if (c < best_cost) {
            best_cost = c;
            best = ord;  // lex-ascending enumeration: first hit is lex-min
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    return best;
}

std::vector<Bits> twins_below(const SpicInstance& inst, const TieBreaker& tb) {
    int n = inst.n();
    std::vector<Bits> out(n, Bits(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            if (u == v || tb.rank[u] >= tb.rank[v]) continue;
            if (inst.sigma[u] != inst.sigma[v]) continue;
            Bits nu = inst.g.adj[u];
            nu.set(u);
            nu.set(v);
            Bits nv = inst.g.adj[v];
            nv.set(u);
            nv.set(v);
            if (nu == nv) out[v].set(u);
        }
    return out;
}

namespace {

bool kuhn_augment(int i, const std::vector<Bits>& allowed, std::vector<int>& match_r,
                  std::vector<char>& visited) {
    bool found = false;
    allowed[i].for_each([&](int j) {
        if (found || visited[j]) return;
        visited[j] = 1;
        if (match_r[j] < 0 || kuhn_augment(match_r[j], allowed, match_r, visited)) {
            match_r[j] = i;
            found = true;
        }
    });
    return found;
}

bool all_matchable(int n_xs, int n_ys, const std::vector<Bits>& allowed) {
    std::vector<int> match_r(n_ys, -1);
    for (int i = 0; i < n_xs; ++i) {
        std::vector<char> visited(n_ys, 0);
        if (!kuhn_augment(i, allowed, match_r, visited)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<int>> lex_min_matching(int n_xs, int n_ys,
                                                 const std::vector<Bits>& allowed) {
    assert(int(allowed.size()) == n_xs);
    if (!all_matchable(n_xs, n_ys, allowed)) return std::nullopt;
    // self-reducibility: pin slots one by one, earliest feasible ys first
    std::vector<Bits> pinned = allowed;
    std::vector<int> out(n_xs, -1);
    for (int i = 0; i < n_xs; ++i) {
        bool fixed = false;
        for (int j : allowed[i].members()) {
            Bits single(n_ys);
            single.set(j);
            Bits saved = pinned[i];
            pinned[i] = single;
            if (all_matchable(n_xs, n_ys, pinned)) {
                out[i] = j;
                fixed = true;
                break;
            }
            pinned[i] = saved;
        }
        assert(fixed);
        (void)fixed;
    }
    return out;
}

}  // namespace pic
