#include "pic/sections.hpp"

#include <algorithm>
#include <set>

namespace pic {

namespace {

// closed neighborhoods after applying a guessed edge set
std::vector<Bits> patched_neighborhoods(const Graph& h, const std::vector<Edge>& extra) {
    std::vector<Bits> nb(h.n);
    for (int v = 0; v < h.n; ++v) nb[v] = h.closed_neighborhood(v);
    for (auto& [u, v] : extra) {
        nb[u].set(v);
        nb[v].set(u);
    }
    return nb;
}

template <class F>
void for_each_small_subset(const std::vector<int>& pool, int max_size, F emit) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t from) -> void {
        emit(chosen);
        if (int(chosen.size()) == max_size) return;
        for (size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

NeighborClassification classify_neighbors(const FiveGuess& guess, const Graph& h) {
    NeighborClassification out;
    out.before = Bits(h.n);
    out.inside = Bits(h.n);
    out.after = Bits(h.n);
    auto nb = patched_neighborhoods(h, guess.inc_edges);
    assert(guess.a >= 0 && guess.c1 >= 0 && guess.c2 >= 0);
    Bits m = nb[guess.a];
    bool contradiction = false;
    m.for_each([&](int u) {
        bool bef = (guess.b1 >= 0 && nb[guess.b1].test(u)) || !nb[guess.c2].test(u);
        bool aft = (guess.b2 >= 0 && nb[guess.b2].test(u)) || !nb[guess.c1].test(u);
        if (bef && aft) contradiction = true;
        else if (bef) out.before.set(u);
        else if (aft) out.after.set(u);
        else out.inside.set(u);
    });
    if (contradiction) {
        out.reason = "contradictory-neighbor";
        return out;
    }
    if (!out.inside.test(guess.a)) {
        out.reason = "anchor-ejected";
        return out;
    }
    out.ok = true;
    return out;
}

std::optional<Bits> resolve_component_sides(const BranchInstance& br, const Graph& g_full,
                                            const Bits& closed_nbhd, const Bits& before,
                                            const Bits& after, int span_lo, int span_hi) {
    const Graph& h = br.spic.g;
    int nh = h.n;
    int lo_orig = br.pos_map.empty() ? span_lo : br.pos_map[span_lo - 1];
    int hi_orig = br.pos_map.empty() ? span_hi : br.pos_map[span_hi - 1];

    std::vector<int> where(g_full.n, -1);  // original vertex -> local id
    for (int w = 0; w < nh; ++w) where[br.h_verts[w]] = w;
    std::vector<int> dollar_pos(g_full.n, 0);
    for (auto& [v, p] : br.sigma_dollar) dollar_pos[v] = p;

    Bits left = before;
    Bits seen = closed_nbhd;
    for (int s = 0; s < nh; ++s) {
        if (seen.test(s)) continue;
        // flood one component of H - N[Lambda]
        std::vector<int> comp{s}, queue{s};
        seen.set(s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            h.adj[u].for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                    queue.push_back(w);
                }
            });
        }
        int side = 0;  // -1 left, +1 right
        for (int u : comp) {
            bool bad = false;
            g_full.adj[br.h_verts[u]].for_each([&](int x) {
                if (bad) return;
                int nbr_side = 0;
                if (where[x] >= 0) {
                    int w = where[x];
                    if (before.test(w)) nbr_side = -1;
                    else if (after.test(w)) nbr_side = 1;
                    else if (closed_nbhd.test(w)) bad = true;  // component touches the
                                                               // class itself: the guessed
                                                               // neighborhood was wrong
                } else {
                    int p = dollar_pos[x];
                    if (p < lo_orig) nbr_side = -1;
                    else if (p > hi_orig) nbr_side = 1;
                    else bad = true;  // expensive anchor inside the span
                }
                if (nbr_side != 0) {
                    if (side != 0 && side != nbr_side) bad = true;
                    side = nbr_side;
                }
            });
            if (bad) return std::nullopt;
        }
        if (side == 0) return std::nullopt;  // unanchored component
        if (side < 0)
            for (int u : comp) left.set(u);
    }
    return left;
}

std::optional<Ordering> class_ordering_for(const Bits& cls, int i, const SpicInstance& inst,
                                           const TieBreaker& tb) {
    auto xs = cls.members();
    std::sort(xs.begin(), xs.end(), [&](int a, int b) { return tb.rank[a] < tb.rank[b]; });
    int sz = int(xs.size());
    std::vector<Bits> allowed(sz, Bits(sz));
    for (int xi = 0; xi < sz; ++xi)
        for (int j = 0; j < sz; ++j)
            if (inst.position_allowed(xs[xi], i + j)) allowed[xi].set(j);
    auto match = lex_min_matching(sz, sz, allowed);
    if (!match) return std::nullopt;
    Ordering ord(inst.n());
    for (int xi = 0; xi < sz; ++xi) ord.place(xs[xi], i + (*match)[xi]);
    return ord;
}

std::vector<TwinTriple> enumerate_twin_triples(const BranchInstance& br, const Graph& g_full,
                                               const Threshold& tau, const TieBreaker& tb,
                                               CeilingCounter& ceiling) {
    const Graph& h = br.spic.g;
    int nh = h.n, t = tau.value;
    std::set<TwinTriple> out;

    for (int a = 0; a < nh; ++a) {
        Bits base = h.closed_neighborhood(a);
        std::vector<int> a_pool;
        for (int v = 0; v < nh; ++v)
            if (!base.test(v)) a_pool.push_back(v);

        for_each_small_subset(a_pool, t, [&](const std::vector<int>& p_extra) {
            Bits m = base;
            for (int v : p_extra) m.set(v);

            // Traces a boundary guess can leave on m. The "before" part of the
            // split is (m ∩ N[b1]) ∪ (m \ N[c2]) and the "after" part is the
            // same shape via b2/c1, so one family of candidate halves serves
            // both sides.
            std::vector<Bits> b_parts{Bits(nh)};  // b = absent leaves nothing
            std::vector<Bits> c_parts;
            for (int x = 0; x < nh; ++x) {
                Bits xbase = h.closed_neighborhood(x);
                std::vector<int> x_pool;
                for (int v = 0; v < nh; ++v)
                    if (!xbase.test(v)) x_pool.push_back(v);
                for_each_small_subset(x_pool, t, [&](const std::vector<int>& q) {
                    Bits nb = xbase;
                    for (int v : q) nb.set(v);
                    if (!m.test(x)) {
                        // candidate b1/b2: outside N[Lambda], so never adjacent to a
                        if (!nb.test(a)) b_parts.push_back(nb & m);
                    } else {
                        // candidate c1/c2: inside N[Lambda], adjacent to a
                        if (nb.test(a)) c_parts.push_back(m - nb);
                    }
                });
            }
            auto dedup = [](std::vector<Bits>& v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
            };
            dedup(b_parts);
            dedup(c_parts);
            std::vector<Bits> halves;
            for (auto& b : b_parts)
                for (auto& c : c_parts) halves.push_back(b | c);
            dedup(halves);

            // vertices whose real neighborhood pokes outside m can't be twins of a
            Bits must_out(nh);
            m.for_each([&](int u) {
                if (!h.closed_neighborhood(u).subset_of(m)) must_out.set(u);
            });
            if (must_out.test(a)) return;

            std::set<std::pair<Bits, Bits>> seen_splits;
            for (auto& bm : halves) {
                if (bm.test(a)) continue;
                for (auto& am : halves) {
                    ceiling.tick();
                    if (am.test(a) || bm.intersects(am)) continue;
                    if (!must_out.subset_of(bm | am)) continue;
                    if (!seen_splits.insert({bm, am}).second) continue;
                    Bits cls = (m - bm) - am;
                    int csz = cls.count();
                    for (int i = 1; i + csz - 1 <= nh; ++i) {
                        auto left = resolve_component_sides(br, g_full, m, bm, am, i, i + csz - 1);
                        if (!left || left->count() != i - 1) continue;
                        auto ord = class_ordering_for(cls, i, br.spic, tb);
                        if (!ord) continue;
                        out.insert(TwinTriple{*left, cls, *ord});
                    }
                }
            }
        });
    }
    return {out.begin(), out.end()};
}

std::vector<Section> enumerate_sections(const BranchInstance& br,
                                        const std::vector<TwinTriple>& triples) {
    int nh = br.spic.n();
    // the canonical ordering places interchangeable vertices ascending, so
    // its prefixes contain a vertex only along with all its smaller twins;
    // cuts violating that can be dropped outright
    auto tl = twins_below(br.spic, TieBreaker::base(nh));
    auto twin_closed = [&](const Bits& a) {
        bool ok = true;
        a.for_each([&](int v) {
            if (!tl[v].subset_of(a)) ok = false;
        });
        return ok;
    };
    std::set<Bits> acc;
    Bits all(nh);
    for (int v = 0; v < nh; ++v) all.set(v);
    acc.insert(all);
    for (auto& tr : triples) {
        int i = tr.left.count() + 1, csz = tr.cls.count();
        for (int p = i; p <= i + csz; ++p) {
            Bits a = tr.left;
            tr.cls.for_each([&](int u) {
                if (tr.class_ordering.pos[u] < p) a.set(u);
            });
            if (twin_closed(a)) acc.insert(a);
        }
    }
    std::vector<Section> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return out;
}

}  // namespace pic
