#include "pic/branching.hpp"

#include <algorithm>

namespace pic {

Threshold compute_threshold(int k) {
    assert(k >= 0);
    int t = 0;
    while (t * t * t < 2 * k) ++t;
    return Threshold{t};
}

namespace {

Ordering identity_ordering(int n) {
    Ordering id(n);
    for (int v = 0; v < n; ++v) id.place(v, v + 1);
    return id;
}

bool reject(std::string* why, const char* rule) {
    if (why) *why = rule;
    return false;
}

// rules that only look at the triples, reused by the enumerator for pruning
bool triples_consistent(const ExpensiveGuess& gs, const Graph& g, std::string* why) {
    int s = gs.size();
    for (int i = 0; i < s; ++i) {
        if (!(1 <= gs.pl[i] && gs.pl[i] <= gs.p[i] && gs.p[i] <= gs.pr[i] && gs.pr[i] <= g.n))
            return reject(why, "position-window");
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (i == j) continue;
            if (gs.p[i] == gs.p[j]) return reject(why, "window-monotonicity");
            if (gs.p[i] < gs.p[j] && (gs.pl[i] > gs.pl[j] || gs.pr[i] > gs.pr[j]))
                return reject(why, "window-monotonicity");
        }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            bool i_covers_j = gs.pl[i] <= gs.p[j] && gs.p[j] <= gs.pr[i];
            bool j_covers_i = gs.pl[j] <= gs.p[i] && gs.p[i] <= gs.pr[j];
            if (i_covers_j != j_covers_i) return reject(why, "edge-consistency");
            if (g.has_edge(gs.verts[i], gs.verts[j]) && !i_covers_j)
                return reject(why, "edge-consistency");
        }
    return true;
}

}  // namespace

std::optional<BranchInstance> build_sandwich(const ExpensiveGuess& guess, const Graph& g,
                                             int k, std::string* why) {
    if (!triples_consistent(guess, g, why)) return std::nullopt;
    int n = g.n, s = guess.size();

    BranchInstance br;
    br.original_n = n;
    br.guess = guess;
    for (int i = 0; i < s; ++i) br.sigma_dollar.emplace_back(guess.verts[i], guess.p[i]);

    // forced pairs inside the guess
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            bool covered = guess.pl[i] <= guess.p[j] && guess.p[j] <= guess.pr[i];
            if (covered && !g.has_edge(guess.verts[i], guess.verts[j])) {
                int a = guess.verts[i], b = guess.verts[j];
                br.f_dollar.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    std::sort(br.f_dollar.begin(), br.f_dollar.end());

    int slack_sum = 0;
    for (int i = 0; i < s; ++i)
        slack_sum += (guess.pr[i] - guess.pl[i]) - g.degree(guess.verts[i]);
    br.cost_offset = slack_sum - int(br.f_dollar.size());
    if (br.cost_offset > k) return (reject(why, "budget"), std::nullopt);

    // remaining vertices and positions
    std::vector<char> taken_pos(n + 1, 0), expensive(n, 0);
    for (int i = 0; i < s; ++i) {
        taken_pos[guess.p[i]] = 1;
        expensive[guess.verts[i]] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!expensive[v]) br.h_verts.push_back(v);
    for (int q = 1; q <= n; ++q)
        if (!taken_pos[q]) br.pos_map.push_back(q);
    int nh = int(br.h_verts.size());

    SpicInstance& inst = br.spic;
    inst.g = g.induced(br.h_verts);
    inst.budget = k - br.cost_offset;

    inst.sigma.assign(nh, Bits(nh));
    for (int u = 0; u < nh; ++u) {
        int orig = br.h_verts[u];
        int lo = 1, hi = n;
        for (int i = 0; i < s; ++i)
            if (g.has_edge(orig, guess.verts[i])) {
                lo = std::max(lo, guess.pl[i]);
                hi = std::min(hi, guess.pr[i]);
            }
        for (int q = 0; q < nh; ++q)
            if (lo <= br.pos_map[q] && br.pos_map[q] <= hi) inst.sigma[u].set(q);
    }

    inst.down = Graph(nh);
    inst.up = Graph(nh);
    for (int i = 0; i < nh; ++i)
        for (int j = i + 1; j < nh; ++j) {
            int qi = br.pos_map[i], qj = br.pos_map[j];
            bool forced = false, forbidden = false;
            for (int x = 0; x < s && !forced; ++x)
                forced = (guess.pl[x] <= qi && qj < guess.p[x]) ||
                         (guess.p[x] < qi && qj <= guess.pr[x]);
            for (int y = 0; y < s && !forbidden; ++y)
                forbidden = (qi < guess.pl[y] && guess.p[y] < qj) ||
                            (qi < guess.p[y] && guess.pr[y] < qj);
            if (forced && forbidden) return (reject(why, "sandwich-containment"), std::nullopt);
            if (forced) inst.down.add_edge(i, j);
            if (!forbidden) inst.up.add_edge(i, j);
        }

    // a guess whose windows produce a non-umbrella sandwich can never be the
    // correct one; the correct branch always builds a valid instance
    Ordering id = identity_ordering(nh);
    if (!has_umbrella_property(inst.down, id) || !has_umbrella_property(inst.up, id))
        return (reject(why, "sandwich-shape"), std::nullopt);
    return br;
}

std::vector<BranchInstance> enumerate_branches(const Graph& g, int k, const Threshold& tau,
                                               CeilingCounter& ceiling) {
    int n = g.n, t = tau.value;
    std::vector<BranchInstance> out;

    ceiling.tick();
    ExpensiveGuess empty;
    auto trivial = build_sandwich(empty, g, k);
    assert(trivial);
    out.push_back(std::move(*trivial));

    // each expensive vertex carries > tau incident completion edges and each
    // edge has two ends, so more than cap vertices would overrun the budget
    int cap = (t + 1) > 0 ? (2 * k) / (t + 1) : 0;
    cap = std::min(cap, n);
    if (cap == 0) return out;

    ExpensiveGuess gs;
    auto extend = [&](auto&& self, int from) -> void {
        for (int v = from; v < n; ++v) {
            int deg = g.degree(v);
            gs.verts.push_back(v);
            gs.p.push_back(0);
            gs.pl.push_back(0);
            gs.pr.push_back(0);
            int i = gs.size() - 1;
            for (int pl = 1; pl <= n; ++pl)
                for (int pr = pl + deg + t + 1; pr <= n; ++pr)  // v must come out expensive
                    for (int p = pl; p <= pr; ++p) {
                        gs.p[i] = p;
                        gs.pl[i] = pl;
                        gs.pr[i] = pr;
                        if (!triples_consistent(gs, g, nullptr)) continue;
                        ceiling.tick();
                        if (auto br = build_sandwich(gs, g, k)) out.push_back(std::move(*br));
                        if (gs.size() < cap) self(self, v + 1);
                    }
            gs.verts.pop_back();
            gs.p.pop_back();
            gs.pl.pop_back();
            gs.pr.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

Ordering lift_solution(const BranchInstance& branch, const Ordering& ord_h) {
    assert(ord_h.is_total() && ord_h.n_vertices() == branch.spic.n());
    Ordering out(branch.original_n);
    for (int w = 0; w < branch.spic.n(); ++w)
        out.pos[branch.h_verts[w]] = branch.pos_map[ord_h.pos[w] - 1];
    for (auto& [v, p] : branch.sigma_dollar) out.pos[v] = p;
    return out;
}

}  // namespace pic
