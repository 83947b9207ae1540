#include "pic/dp.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "pic/spic.hpp"

namespace pic {

namespace {

// Union of two partial placements; nullopt when they disagree on a vertex or
// crowd two vertices onto one position.
std::optional<Ordering> merge_orderings(const Ordering& a, const Ordering& b) {
    int n = a.n_vertices();
    Ordering out = a;
    std::vector<char> taken(n + 1, 0);
    for (int v = 0; v < n; ++v)
        if (out.pos[v]) taken[out.pos[v]] = 1;
    for (int v = 0; v < n; ++v) {
        int p = b.pos[v];
        if (!p || out.pos[v] == p) continue;
        if (out.pos[v] || taken[p]) return std::nullopt;
        out.pos[v] = p;
        taken[p] = 1;
    }
    return out;
}

Chain chain_tail(const Chain& c) {
    Chain t;
    t.z.assign(c.z.begin() + 1, c.z.end());
    t.u.assign(c.u.begin() + 1, c.u.end());
    t.b.assign(c.b.begin() + 1, c.b.end());
    return t;
}

// positions lo..hi pairwise adjacent in the allowed graph
bool window_available(const Graph& up, int lo, int hi) {
    for (int p = lo; p <= hi; ++p)
        for (int q = p + 1; q <= hi; ++q)
            if (!up.has_edge(p - 1, q - 1)) return false;
    return true;
}

void add_position_clique(Graph& g, int lo, int hi) {
    for (int p = lo; p <= hi; ++p)
        for (int q = p + 1; q <= hi; ++q)
            g.add_edge(p - 1, q - 1);
}

// every edge's position interval is filled in; cheap sanity check for the
// thickened forced graphs
bool identity_umbrella(const Graph& g) {
    for (auto [x, y] : g.edges())
        for (int i = x; i <= y; ++i)
            for (int j = i + 1; j <= y; ++j)
                if (!g.has_edge(i, j)) return false;
    return true;
}

}  // namespace

TieBreaker AugmentedInstance::tie_breaker() const {
    std::vector<int> order;
    order.reserve(original_n + 5);
    order.push_back(a2);
    order.push_back(a1);
    for (int v = 0; v < original_n; ++v) order.push_back(v);
    order.push_back(o1);
    order.push_back(o2);
    order.push_back(o3);
    return TieBreaker::from_order(order);
}

AugmentedInstance augment(const SpicInstance& inst) {
    int n = inst.n();
    assert(n >= 1);

    AugmentedInstance aug;
    aug.original_n = n;
    aug.a1 = n;
    aug.a2 = n + 1;
    aug.o1 = n + 2;
    aug.o2 = n + 3;
    aug.o3 = n + 4;
    int nn = n + 5;

    Graph g2(nn);
    for (auto [x, y] : inst.g.edges()) g2.add_edge(x, y);
    g2.add_edge(aug.a2, aug.a1);
    g2.add_edge(aug.o1, aug.o2);
    g2.add_edge(aug.o2, aug.o3);

    std::vector<Bits> sigma(nn, Bits(nn));
    for (int v = 0; v < n; ++v) {
        Bits& s = sigma[v];
        inst.sigma[v].for_each([&](int b) { s.set(b + 2); });
    }
    sigma[aug.a2].set(0);      // position 1
    sigma[aug.a1].set(1);      // position 2
    sigma[aug.o1].set(n + 2);  // position n+3
    sigma[aug.o2].set(n + 3);
    sigma[aug.o3].set(n + 4);

    // guard positions stay isolated in the forced graph; the allowed graph
    // gains exactly the pairs the two guard paths need, and neither seam, so
    // nothing can tie a guard to an original
    Graph down2(nn), up2(nn);
    for (auto [x, y] : inst.down.edges()) down2.add_edge(x + 2, y + 2);
    for (auto [x, y] : inst.up.edges()) up2.add_edge(x + 2, y + 2);
    up2.add_edge(0, 1);
    up2.add_edge(n + 2, n + 3);
    up2.add_edge(n + 3, n + 4);

    aug.base = SpicInstance{std::move(g2), inst.budget, std::move(sigma), std::move(down2),
                            std::move(up2)};
    aug.base.validate();
    return aug;
}

Ordering strip_augmentation(const AugmentedInstance& aug, const Ordering& full) {
    assert(full.is_total());
    Ordering out(aug.original_n);
    for (int v = 0; v < aug.original_n; ++v) out.place(v, full.position(v) - 2);
    return out;
}

std::vector<Section> augment_sections(const AugmentedInstance& aug,
                                      const std::vector<Section>& sections) {
    int nn = aug.base.n();
    std::vector<Section> out;

    Bits front(nn);
    out.push_back(front);  // empty prefix
    front.set(aug.a2);
    out.push_back(front);
    front.set(aug.a1);
    out.push_back(front);

    for (const Section& s : sections) {
        Bits lifted = front;
        s.for_each([&](int v) { lifted.set(v); });
        out.push_back(lifted);
    }

    Bits vall = front;
    for (int v = 0; v < aug.original_n; ++v) vall.set(v);
    vall.set(aug.o1);
    out.push_back(vall);
    vall.set(aug.o2);
    out.push_back(vall);

    std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int jump(const Graph& g_completed, const Ordering& ord, int p) {
    int v = ord.vertex_at(p);
    assert(v >= 0);
    for (int q = p + 1; q <= g_completed.n; ++q) {
        int w = ord.vertex_at(q);
        if (w < 0) break;
        if (!g_completed.has_edge(v, w)) return q;
    }
    return kJumpInfinity;
}

std::optional<Ordering> deduce_block_ordering(const Bits& before, const Bits& block,
                                              const Completion& inc_edges,
                                              const SpicInstance& inst, const TieBreaker& tb) {
    int n = inst.n();
    std::vector<Bits> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(inst.g.adj[v]);
    for (auto [x, y] : inc_edges.edges) {
        adj[x].set(y);
        adj[y].set(x);
    }
    Bits outside(n);
    for (int v = 0; v < n; ++v) outside.set(v);
    outside -= before;
    outside -= block;

    // group the block by (left trace, right trace); equal traces are
    // interchangeable up to the position sets
    struct Level {
        Bits ln, rn;
        std::vector<int> verts;
    };
    std::vector<Level> levels;
    block.for_each([&](int u) {
        Bits ln = adj[u] & before;
        Bits rn = adj[u] & outside;
        for (auto& lv : levels)
            if (lv.ln == ln && lv.rn == rn) {
                lv.verts.push_back(u);
                return;
            }
        levels.push_back(Level{std::move(ln), std::move(rn), {u}});
    });

    // earlier vertices see more of the prefix and less of the outside; if two
    // levels tie on both counts they cannot be comparable at all
    std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
        if (a.ln.count() != b.ln.count()) return a.ln.count() > b.ln.count();
        return a.rn.count() < b.rn.count();
    });
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
        const Level& a = levels[i];
        const Level& b = levels[i + 1];
        if (!b.ln.subset_of(a.ln) || !a.rn.subset_of(b.rn)) return std::nullopt;
    }

    int base = before.count() + 1;
    std::vector<int> level_start(levels.size());
    int cur = base;
    for (size_t i = 0; i < levels.size(); ++i) {
        level_start[i] = cur;
        cur += int(levels[i].verts.size());
    }
    std::vector<int> level_of(n, -1);
    for (size_t i = 0; i < levels.size(); ++i)
        for (int u : levels[i].verts) level_of[u] = int(i);

    std::vector<int> xs = block.members();
    std::sort(xs.begin(), xs.end(), [&](int a, int b) { return tb.rank[a] < tb.rank[b]; });

    int m = int(xs.size());
    std::vector<Bits> allowed(m, Bits(m));
    for (int i = 0; i < m; ++i) {
        int lv = level_of[xs[i]];
        int s = level_start[lv];
        int e = s + int(levels[lv].verts.size()) - 1;
        for (int p = s; p <= e; ++p)
            if (inst.position_allowed(xs[i], p)) allowed[i].set(p - base);
    }
    auto match = lex_min_matching(m, m, allowed);
    if (!match) return std::nullopt;

    Ordering out(n);
    for (int i = 0; i < m; ++i) out.place(xs[i], base + (*match)[i]);
    return out;
}

std::vector<JumpTuple> enumerate_jump_family(const SpicInstance& inst,
                                             const std::vector<Section>& sections,
                                             const Threshold& tau, const TieBreaker& tb,
                                             CeilingCounter& ceiling, SolveStats& stats) {
    int n = inst.n();
    long long cap = tau.value > 0 ? (2LL * inst.budget) / tau.value : 0;
    std::vector<JumpTuple> out;
    auto tl = twins_below(inst, tb);

    for (const Bits& a : sections) {
        for (const Bits& b : sections) {
            if (a == b || !a.subset_of(b)) continue;
            ceiling.tick();
            int lo = a.count() + 1, hi = b.count();
            if (!window_available(inst.up, lo, hi)) continue;

            // a genuine jump set is spanned by no edge: nothing placed before
            // it reaches beyond it
            bool crossing = false;
            a.for_each([&](int v) {
                if ((inst.g.adj[v] - b).any()) crossing = true;
            });
            if (crossing) continue;

            Bits x = b - a;
            std::vector<int> xm = x.members();
            int m = int(xm.size());

            // the window is a clique of the completed graph, so every
            // non-edge inside it is bought no matter how it is arranged
            long long within = 0;
            std::vector<Bits> rn(m, Bits(n)), ln(m, Bits(n));
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j)
                    if (!inst.g.has_edge(xm[i], xm[j])) ++within;
                rn[i] = inst.g.adj[xm[i]] - b;
                ln[i] = inst.g.adj[xm[i]] & a;
            }
            if (within > cap) continue;

            // interchangeable vertices land in tb order in the canonical
            // ordering, so a window member whose tb-smaller twin sits past
            // the window kills the pair, and twins inside the window may only
            // appear ascending. This tames the factorial walk whenever the
            // graph has any symmetry.
            std::vector<std::vector<int>> twin_before(m);
            bool dead = false;
            for (int i = 0; i < m && !dead; ++i) {
                Bits owed = tl[xm[i]] - a;
                if (!owed.subset_of(x)) { dead = true; break; }
                owed.for_each([&](int v) {
                    for (int j = 0; j < m; ++j)
                        if (xm[j] == v) { twin_before[i].push_back(j); break; }
                });
            }
            if (dead) continue;

            // place the block left to right. Right reaches must grow along
            // the window and left reaches must shrink, so each placement buys
            // a computable number of edges; prefix costs only ever grow,
            // which makes the cap a safe pruning bound.
            std::vector<int> seq(m, -1);
            Bits usedv(m);
            auto rec = [&](auto&& self, int depth, const Bits& reach, long long cost_r,
                           long long lb_l) -> void {
                ceiling.tick();
                if (depth == m) {
                    long long cost_l = 0;  // exact left cost, scanned from the right end
                    Bits lreach(n);
                    for (int i = m - 1; i >= 0; --i) {
                        cost_l += (lreach - ln[seq[i]]).count();
                        lreach |= ln[seq[i]];
                    }
                    if (within + cost_r + cost_l > cap) return;
                    JumpTuple t;
                    t.before = a;
                    t.block = x;
                    t.block_ordering = Ordering(n);
                    for (int i = 0; i < m; ++i) t.block_ordering.place(xm[seq[i]], lo + i);
                    // forced pairs only grow as more vertices are placed, so
                    // an arrangement that alone exceeds the budget is dead
                    if (auto lb = completion_cost(inst, t.block_ordering); !lb || *lb > inst.budget)
                        return;
                    out.push_back(std::move(t));
                    stats.jump_tuples++;
                    return;
                }
                for (int i = 0; i < m; ++i) {
                    if (usedv.test(i)) continue;
                    if (!inst.position_allowed(xm[i], lo + depth)) continue;
                    bool held_back = false;
                    for (int j : twin_before[i])
                        if (!usedv.test(j)) { held_back = true; break; }
                    if (held_back) continue;
                    long long cr = cost_r + (reach - rn[i]).count();
                    long long ll =
                        depth > 0 ? lb_l + (ln[i] - ln[seq[depth - 1]]).count() : 0;
                    if (within + cr + ll > cap) continue;
                    usedv.set(i);
                    seq[depth] = i;
                    self(self, depth + 1, reach | rn[i], cr, ll);
                    usedv.reset(i);
                }
            };
            rec(rec, 0, Bits(n), 0, 0);
        }
    }
    return out;
}

std::vector<Chain> enumerate_chains(const SpicInstance& inst, const std::vector<Section>& sections,
                                    const Threshold& tau, const ChainContext& ctx,
                                    CeilingCounter& ceiling, SolveStats& stats) {
    int n = inst.n();
    assert(ctx.sx1 && ctx.sx2 && ctx.full2);

    std::vector<std::vector<int>> by_size(n + 1);
    std::vector<Bits> closure;
    closure.reserve(sections.size());
    for (size_t i = 0; i < sections.size(); ++i) {
        by_size[sections[i].count()].push_back(int(i));
        Bits c = sections[i];
        sections[i].for_each([&](int v) { c |= inst.g.adj[v]; });
        closure.push_back(std::move(c));
    }

    // chain levels are iterated jumps, and a jump window is a clique of the
    // completed graph, so consecutive levels must span an up-clique of
    // positions. clique_reach[z] = last position h with [z, h] an up-clique.
    std::vector<int> clique_reach(n + 2, n);
    for (int z = n - 1; z >= 1; --z) {
        int h = z;
        while (h < n && inst.up.has_edge(z - 1, h)) ++h;
        clique_reach[z] = std::min(h, clique_reach[z + 1]);
    }

    // -2 = free choice, kChainEnd past the second window, otherwise the
    // vertex the enclosing blocks pin to this position
    auto pin_at = [&](int z) -> int {
        if (z >= ctx.p1 && z < ctx.r1) return ctx.sx1->vertex_at(z);
        if (z >= ctx.p2 && z < ctx.r2) return ctx.sx2->vertex_at(z);
        if (z == ctx.r2) return kChainEnd;
        return -2;
    };

    // The windows force their prefix sets outright; strictly between them the
    // set is sandwiched between A1 u X1 and A2. Without this filter the
    // enumeration drowns in cuts no realization of the two tuples can produce.
    Bits x1full = *ctx.a1;
    for (int p = ctx.p1; p < ctx.r1; ++p) x1full.set(ctx.sx1->vertex_at(p));
    auto b_ok = [&](int z, const Bits& bel) -> bool {
        if (z <= ctx.r1) {
            Bits want = *ctx.a1;
            for (int p = ctx.p1; p < z; ++p) want.set(ctx.sx1->vertex_at(p));
            return bel == want;
        }
        if (z >= ctx.p2) {
            Bits want = *ctx.a2;
            for (int p = ctx.p2; p < z; ++p) want.set(ctx.sx2->vertex_at(p));
            return bel == want;
        }
        return x1full.subset_of(bel) && bel.subset_of(*ctx.a2);
    };

    std::vector<Chain> out;
    Chain cur;
    std::vector<int> cur_sec;

    // window pins plus the u-values placed so far; forced pairs are monotone
    // in the domain, so once these overshoot the budget the whole subtree of
    // extensions is dead
    Ordering pinord(n);
    for (int p = ctx.p1; p < ctx.r1; ++p) pinord.place(ctx.sx1->vertex_at(p), p);
    for (int p = ctx.p2; p < ctx.r2; ++p) pinord.place(ctx.sx2->vertex_at(p), p);

    // Vertices strictly between consecutive cuts share one clique window of
    // the completed graph, so each non-edge among them is bought even though
    // their exact positions are open. Pairs of pinned vertices are already in
    // the completion_cost estimate; the rest stack on top of it.
    auto window_debt = [&](const Bits& wset) -> int {
        std::vector<int> ws = wset.members();
        int debt = 0;
        for (size_t i = 0; i < ws.size(); ++i)
            for (size_t j = i + 1; j < ws.size(); ++j) {
                if (inst.g.has_edge(ws[i], ws[j])) continue;
                if (pinord.pos[ws[i]] && pinord.pos[ws[j]]) continue;
                ++debt;
            }
        return debt;
    };

    // level with landing position z and prefix set bel (section index si);
    // prev_u = vertex at the previous level, extra = accumulated clique debt
    auto enter = [&](auto&& self, int z, int si, int prev_u, int extra) -> void {
        const Bits& bel = sections[si];
        if (!b_ok(z, bel)) return;
        int pin = pin_at(z);
        std::vector<int> choices;
        if (pin == -2) {
            // a vertex sitting strictly before the second window lies in A2,
            // and is canonical only once its tb-smaller twins are below it
            (*ctx.a2 - bel).for_each([&](int v) {
                if (!inst.position_allowed(v, z)) return;
                if (ctx.twins && !(*ctx.twins)[v].subset_of(bel)) return;
                choices.push_back(v);
            });
        } else if (pin == kChainEnd) {
            if (bel != *ctx.full2) return;  // the last cut must close the state
            choices.push_back(kChainEnd);
        } else {
            assert(pin >= 0);
            if (bel.test(pin)) return;
            choices.push_back(pin);
        }
        for (int u : choices) {
            // a jump lands on the first non-neighbor of the previous vertex
            if (u >= 0 && prev_u >= 0 && inst.g.has_edge(prev_u, u)) continue;
            bool placed = false;
            if (u >= 0 && !pinord.pos[u]) {
                pinord.place(u, z);
                placed = true;
                if (auto lb = completion_cost(inst, pinord);
                    !lb || *lb + extra > inst.budget) {
                    pinord.pos[u] = 0;
                    continue;
                }
            }
            cur.z.push_back(z);
            cur.u.push_back(u);
            cur.b.push_back(bel);
            cur_sec.push_back(si);
            if (z >= ctx.p2) {
                // landed in the second window; the chain is complete
                out.push_back(cur);
                stats.chains++;
            } else if (int(cur.z.size()) <= tau.value) {
                int zmax = std::min(ctx.r2, clique_reach[z] + 1);
                for (int z2 = z + 1; z2 <= zmax; ++z2) {
                    for (int sj : by_size[z2 - 1]) {
                        const Bits& bnext = sections[sj];
                        ceiling.tick();
                        if (u >= 0 && !bnext.test(u)) continue;
                        // a jump lands on the first non-neighbor, so every
                        // neighbor of u sits below the next cut
                        if (u >= 0 && !inst.g.adj[u].subset_of(bnext)) continue;
                        if (!bel.subset_of(bnext)) continue;
                        if (!closure[si].subset_of(bnext)) continue;
                        self(self, z2, sj, u, extra + window_debt(bnext - bel));
                    }
                }
            }
            cur.z.pop_back();
            cur.u.pop_back();
            cur.b.pop_back();
            cur_sec.pop_back();
            if (placed) pinord.pos[u] = 0;
        }
    };

    for (int z = ctx.p1; z <= ctx.r2; ++z)
        for (int si : by_size[z - 1]) {
            ceiling.tick();
            enter(enter, z, si, -1, 0);
        }
    return out;
}

std::vector<Ordering> layer_two_dp(const SpicInstance& inst, const std::vector<Chain>& chains,
                                   const JumpTuple& j1, const JumpTuple& j2, const TieBreaker& tb,
                                   CeilingCounter& ceiling, SolveStats& stats) {
    int n = inst.n();
    int m = int(chains.size());
    int p1 = j1.lo(), r1 = j1.hi() + 1;
    int p2 = j2.lo(), r2 = j2.hi() + 1;
    Bits full2 = j2.before | j2.block;

    auto pair_ok = [&](const Chain& c1, const Chain& c2) -> bool {
        int s1 = c1.s(), s2 = c2.s();
        if (s2 > s1 || s1 > s2 + 1) return false;
        for (int i = 0; i <= s2; ++i)
            if (c1.z[i] > c2.z[i] || !c1.b[i].subset_of(c2.b[i])) return false;
        for (int i = 0; i < s1; ++i)
            if (c2.z[i] > c1.z[i + 1] || !c2.b[i].subset_of(c1.b[i + 1])) return false;
        for (int i = 0; i <= s1; ++i)
            for (int j = 0; j <= s2; ++j)
                if ((c1.z[i] == c2.z[j]) != (c1.u[i] == c2.u[j])) return false;
        if (s2 < s1 && !c1.b[s1].subset_of(full2)) return false;
        return true;
    };

    struct Pieces {
        std::vector<Bits> c;                   // domain pieces
        std::vector<std::pair<int, int>> zr;   // their position ranges
        Bits domain{0};
    };
    auto build_pieces = [&](const Chain& c1, const Chain& c2) -> std::optional<Pieces> {
        Pieces ps;
        ps.domain = Bits(n);
        int s1 = c1.s(), s2 = c2.s();
        for (int i = 0; i <= s2; ++i) {
            ps.c.push_back(c2.b[i] - c1.b[i]);
            ps.zr.push_back({c1.z[i], c2.z[i] - 1});
        }
        if (s2 < s1) {
            ps.c.push_back(full2 - c1.b[s1]);
            ps.zr.push_back({c1.z[s1], r2 - 1});
        }
        for (size_t i = 0; i < ps.c.size(); ++i) {
            ps.domain |= ps.c[i];
            if (!window_available(inst.up, ps.zr[i].first, ps.zr[i].second))
                return std::nullopt;
        }
        return ps;
    };

    // The thickened instance only depends on where the cuts land, so many
    // states share one. The second window and every gap a state spans are
    // cliques of the completed graph; forcing them keeps suffix costs honest.
    std::map<std::pair<std::vector<int>, std::vector<int>>, SpicInstance> star_cache;
    auto star_for = [&](const Chain& c1, const Chain& c2,
                        const Pieces& ps) -> const SpicInstance& {
        auto key = std::make_pair(c1.z, c2.z);
        auto it = star_cache.find(key);
        if (it != star_cache.end()) return it->second;
        Graph down_star = inst.down;
        add_position_clique(down_star, p2, r2 - 1);
        for (auto [lo, hi] : ps.zr) add_position_clique(down_star, lo, hi);
        assert(identity_umbrella(down_star));
        SpicInstance star{inst.g, inst.budget, inst.sigma, std::move(down_star), inst.up};
        return star_cache.emplace(std::move(key), std::move(star)).first->second;
    };

    // tails resolved up front so the shift case is two array reads, and
    // chains bucketed by first landing position for the split scan
    std::map<Chain, int> chain_index;
    for (int i = 0; i < m; ++i) chain_index[chains[i]] = i;
    std::vector<int> tail_of(m, -1);
    for (int i = 0; i < m; ++i) {
        if (chains[i].s() < 1) continue;
        auto it = chain_index.find(chain_tail(chains[i]));
        if (it != chain_index.end()) tail_of[i] = it->second;
    }
    std::vector<std::vector<int>> by_z0(r2 + 1);
    for (int i = 0; i < m; ++i)
        if (chains[i].z[0] <= r2) by_z0[chains[i].z[0]].push_back(i);

    Ordering window_pins(n);
    for (int p = p1; p < r1; ++p) window_pins.place(j1.block_ordering.vertex_at(p), p);
    for (int p = p2; p < r2; ++p) window_pins.place(j2.block_ordering.vertex_at(p), p);

    // a candidate is good when it covers exactly the state's pieces, lands
    // them in their ranges, honours every pin, and stays inside the sandwich
    auto validate = [&](const Ordering& f, const Chain& c1, const Chain& c2,
                        const Pieces& ps, const SpicInstance*& star) -> std::optional<int> {
        if (f.domain() != ps.domain) return std::nullopt;
        std::vector<char> taken(n + 1, 0);
        for (int v = 0; v < n; ++v)
            if (f.pos[v]) {
                if (taken[f.pos[v]]) return std::nullopt;
                taken[f.pos[v]] = 1;
            }
        for (size_t i = 0; i < ps.c.size(); ++i) {
            bool inside = true;
            ps.c[i].for_each([&](int v) {
                if (f.pos[v] < ps.zr[i].first || f.pos[v] > ps.zr[i].second) inside = false;
            });
            if (!inside) return std::nullopt;
        }
        for (int p = p1; p < r1; ++p) {
            int x = j1.block_ordering.vertex_at(p);
            if (ps.domain.test(x) ? f.pos[x] != p : taken[p]) return std::nullopt;
        }
        for (int p = p2; p < r2; ++p) {
            int x = j2.block_ordering.vertex_at(p);
            if (ps.domain.test(x) ? f.pos[x] != p : taken[p]) return std::nullopt;
        }
        for (int i = 0; i <= c1.s(); ++i) {
            int u = c1.u[i], z = c1.z[i];
            if (u == kChainEnd) continue;
            if (ps.domain.test(u) ? f.pos[u] != z : taken[z]) return std::nullopt;
        }
        if (!star) star = &star_for(c1, c2, ps);
        return completion_cost(*star, f);
    };

    // lazy table over chain pairs; recursion always lands on a strictly
    // narrower cut, so placeholder entries are never read back mid-compute
    std::unordered_map<long long, std::optional<Ordering>> memo;
    auto value = [&](auto&& self, int ci, int cj) -> const std::optional<Ordering>& {
        auto [slot_it, fresh] = memo.try_emplace(int64_t(ci) * m + cj, std::nullopt);
        std::optional<Ordering>& slot = slot_it->second;
        if (!fresh) return slot;
        const Chain& c1 = chains[ci];
        const Chain& c2 = chains[cj];
        ceiling.tick();
        if (!pair_ok(c1, c2)) return slot;

        // the union of both chains' pins sits inside every candidate, and
        // forced pairs only grow with the domain
        Ordering upins = window_pins;
        std::vector<char> occ(n + 2, 0);
        for (int v = 0; v < n; ++v)
            if (upins.pos[v]) occ[upins.pos[v]] = 1;
        for (const Chain* pc : {&c1, &c2})
            for (int i = 0; i <= pc->s(); ++i) {
                int u = pc->u[i], z = pc->z[i];
                if (u < 0 || upins.pos[u] == z) continue;
                if (upins.pos[u] != 0 || occ[z]) return slot;
                upins.place(u, z);
                occ[z] = 1;
            }

        auto ps = build_pieces(c1, c2);
        if (!ps) return slot;

        // each domain piece fills one clique window of the completed graph,
        // so its unpinned non-edges are bought on top of the pinned cost
        int debt = 0;
        for (const Bits& piece : ps->c) {
            std::vector<int> ws = piece.members();
            for (size_t a = 0; a < ws.size(); ++a)
                for (size_t b = a + 1; b < ws.size(); ++b) {
                    if (inst.g.has_edge(ws[a], ws[b])) continue;
                    if (upins.pos[ws[a]] && upins.pos[ws[b]]) continue;
                    ++debt;
                }
        }
        if (auto lb = completion_cost(inst, upins); !lb || *lb + debt > inst.budget)
            return slot;
        stats.dp_states++;

        const SpicInstance* star = nullptr;
        int best_cost = INT_MAX;
        auto consider = [&](const Ordering& f) {
            auto c = validate(f, c1, c2, *ps, star);
            if (!c || *c > inst.budget) return;
            if (!slot || *c < best_cost ||
                (*c == best_cost && lex_compare(f, *slot, tb) < 0)) {
                slot = f;
                best_cost = *c;
            }
        };

        int z10 = c1.z[0], z20 = c2.z[0];
        if (z10 == z20 || z10 >= p2 - 1) {
            // every covered position is pinned here, so there is at most one
            // candidate to check
            Ordering f(n);
            bool ok = true;
            std::vector<char> taken(n + 1, 0);
            for (size_t i = 0; ok && i < ps->zr.size(); ++i)
                for (int z = ps->zr[i].first; ok && z <= ps->zr[i].second; ++z) {
                    int v = -1;
                    if (z >= p2 && z < r2) v = j2.block_ordering.vertex_at(z);
                    for (int l = 0; v < 0 && l <= c1.s(); ++l)
                        if (c1.z[l] == z) v = c1.u[l];
                    if (v < 0 && z >= p1 && z < r1) v = j1.block_ordering.vertex_at(z);
                    if (v < 0 || f.pos[v] || taken[z])
                        ok = false;
                    else {
                        f.pos[v] = z;
                        taken[z] = 1;
                    }
                }
            if (ok) consider(f);
        } else if (z20 == z10 + 1) {
            // the first chain is one step ahead; peel its front level off both
            if (tail_of[ci] >= 0 && tail_of[cj] >= 0) {
                const auto& sub = self(self, tail_of[ci], tail_of[cj]);
                if (sub && c1.u[0] >= 0 && !sub->pos[c1.u[0]] && sub->vertex_at(z10) < 0) {
                    Ordering f = *sub;
                    f.pos[c1.u[0]] = z10;
                    consider(f);
                }
            }
        } else {
            // split on the first landing position of a middle chain
            for (int zm = z10 + 1; zm < z20; ++zm)
                for (int cm : by_z0[zm]) {
                    ceiling.tick();
                    const auto& g1 = self(self, ci, cm);
                    if (!g1) continue;
                    const auto& g2 = self(self, cm, cj);
                    if (!g2) continue;
                    auto merged = merge_orderings(*g1, *g2);
                    if (merged) consider(*merged);
                }
        }
        return slot;
    };

    // computed values surface when the two cuts tile the whole middle region,
    // which pins the first one to the left window edge
    std::vector<Ordering> out;
    for (int ci = 0; ci < m; ++ci) {
        const Chain& c1 = chains[ci];
        if (c1.z[0] != p1) continue;
        for (int cj = 0; cj < m; ++cj) {
            const Chain& c2 = chains[cj];
            int s1 = c1.s(), s2 = c2.s();
            if (s2 != s1 && s2 != s1 - 1) continue;
            bool abut = true;
            for (int i = 0; abut && i < s1; ++i) abut = c2.z[i] == c1.z[i + 1];
            if (s2 == s1 && c2.z[s2] != r2) abut = false;
            if (!abut) continue;
            const auto& v = value(value, ci, cj);
            if (v) out.push_back(*v);
        }
    }
    return out;
}

std::optional<Ordering> layer_one_dp(const AugmentedInstance& aug,
                                     const std::vector<JumpTuple>& family,
                                     const std::vector<Section>& sections, const Threshold& tau,
                                     const TieBreaker& tb, CeilingCounter& ceiling,
                                     SolveStats& stats) {
    const SpicInstance& inst = aug.base;
    int nn = inst.n();
    auto twins = twins_below(inst, tb);

    Bits empty(nn);
    Bits front(nn);
    front.set(aug.a2);
    front.set(aug.a1);
    Bits vall = front;
    for (int v = 0; v < aug.original_n; ++v) vall.set(v);
    Bits rear(nn);
    rear.set(aug.o1);
    rear.set(aug.o2);

    int start = -1, finish = -1;
    for (size_t i = 0; i < family.size(); ++i) {
        if (family[i].before == empty && family[i].block == front) start = int(i);
        if (family[i].before == vall && family[i].block == rear) finish = int(i);
    }
    if (start < 0 || finish < 0) return std::nullopt;

    struct State {
        int i, j;
        int measure;
    };
    std::vector<State> states;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = 0; j < family.size(); ++j) {
            ceiling.tick();
            const JumpTuple& t1 = family[i];
            const JumpTuple& t2 = family[j];
            if (!t1.before.subset_of(t2.before)) continue;
            if (!(t1.before | t1.block).subset_of(t2.before | t2.block)) continue;
            states.push_back({int(i), int(j), (t2.before - t1.before).count()});
        }
    std::sort(states.begin(), states.end(), [](const State& a, const State& b) {
        if (a.measure != b.measure) return a.measure < b.measure;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    // states grouped by endpoint tuple, sorted by the other end, so the split
    // loop can walk a sorted intersection instead of probing a map per
    // candidate middle tuple
    std::vector<std::vector<std::pair<int, int>>> succ(family.size()), pred(family.size());
    for (size_t s = 0; s < states.size(); ++s) {
        succ[states[s].i].push_back({states[s].j, int(s)});
        pred[states[s].j].push_back({states[s].i, int(s)});
    }
    for (auto& v : succ) std::sort(v.begin(), v.end());
    for (auto& v : pred) std::sort(v.begin(), v.end());

    std::vector<std::optional<Ordering>> memo(states.size());

    for (size_t si = 0; si < states.size(); ++si) {
        const JumpTuple& J1 = family[states[si].i];
        const JumpTuple& J2 = family[states[si].j];
        ceiling.tick();
        stats.dp_states++;

        Bits full2 = J2.before | J2.block;
        Bits dom = full2 - J1.before;
        int p1 = J1.lo(), r1 = J1.hi() + 1;
        int p2 = J2.lo(), r2 = J2.hi() + 1;

        auto validate = [&](const Ordering& f) -> std::optional<int> {
            if (f.domain() != dom) return std::nullopt;
            std::vector<char> taken(nn + 1, 0);
            for (int v = 0; v < nn; ++v)
                if (f.pos[v]) {
                    if (f.pos[v] < p1 || f.pos[v] >= r2 || taken[f.pos[v]])
                        return std::nullopt;
                    taken[f.pos[v]] = 1;
                }
            for (int p = p1; p < r1; ++p) {
                int x = J1.block_ordering.vertex_at(p);
                if (dom.test(x) ? f.pos[x] != p : taken[p]) return std::nullopt;
            }
            for (int p = p2; p < r2; ++p) {
                int x = J2.block_ordering.vertex_at(p);
                if (dom.test(x) ? f.pos[x] != p : taken[p]) return std::nullopt;
            }
            return completion_cost(inst, f);
        };

        std::optional<Ordering> best;
        int best_cost = INT_MAX;
        auto consider = [&](const Ordering& f) {
            auto c = validate(f);
            if (!c || *c > inst.budget) return;
            if (!best || *c < best_cost ||
                (*c == best_cost && lex_compare(f, *best, tb) < 0)) {
                best = f;
                best_cost = *c;
            }
        };

        // both windows sit inside every candidate, and forced pairs only grow
        // with the domain, so a state whose pins alone overshoot is dead
        auto pins = merge_orderings(J1.block_ordering, J2.block_ordering);
        if (!pins) continue;
        if (auto lb = completion_cost(inst, *pins); !lb || *lb > inst.budget) continue;

        if (J2.before.subset_of(J1.before | J1.block)) {
            // the windows overlap or touch: both block placements together
            // already cover the whole domain
            consider(*pins);
        } else {
            const auto& out1 = succ[states[si].i];
            const auto& in2 = pred[states[si].j];
            for (size_t pa = 0, pb = 0; pa < out1.size() && pb < in2.size();) {
                if (out1[pa].first < in2[pb].first) { ++pa; continue; }
                if (in2[pb].first < out1[pa].first) { ++pb; continue; }
                int m = out1[pa].first;
                ceiling.tick();
                const auto& g1 = memo[out1[pa].second];
                const auto& g2 = memo[in2[pb].second];
                ++pa, ++pb;
                const Bits& a3 = family[m].before;
                if (a3 == J1.before || a3 == J2.before) continue;
                if (!g1 || !g2) continue;
                auto merged = merge_orderings(*g1, *g2);
                if (merged) consider(*merged);
            }
            if (r1 < p2) {
                ChainContext ctx;
                ctx.p1 = p1;
                ctx.r1 = r1;
                ctx.p2 = p2;
                ctx.r2 = r2;
                ctx.sx1 = &J1.block_ordering;
                ctx.sx2 = &J2.block_ordering;
                ctx.a1 = &J1.before;
                ctx.a2 = &J2.before;
                ctx.full2 = &full2;
                ctx.twins = &twins;
                auto chains = enumerate_chains(inst, sections, tau, ctx, ceiling, stats);
                for (const Ordering& f :
                     layer_two_dp(inst, chains, J1, J2, tb, ceiling, stats))
                    consider(f);
            }
        }
        memo[si] = std::move(best);
    }

    auto top = std::lower_bound(succ[start].begin(), succ[start].end(),
                                std::pair<int, int>{finish, INT_MIN});
    if (top == succ[start].end() || top->first != finish || !memo[top->second])
        return std::nullopt;

    Ordering full = *memo[top->second];
    if (full.pos[aug.o3]) return std::nullopt;
    full.place(aug.o3, nn);
    if (!full.is_total()) return std::nullopt;
    if (!is_feasible(inst, full).feasible) return std::nullopt;
    if (minimal_completion(inst, full).size() > inst.budget) return std::nullopt;
    return full;
}

}  // namespace pic
