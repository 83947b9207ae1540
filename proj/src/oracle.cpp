#include "pic/oracle.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "pic/recognition.hpp"

namespace pic {

SolveResult solve_bruteforce(const SpicInstance& inst, const TieBreaker& tb) {
    SolveResult res;
    if (inst.n() > kBruteforceLimit) {
        res.status = Status::refused;
        res.note = "instance too large for the permutation oracle (n > " +
                   std::to_string(kBruteforceLimit) + ")";
        return res;
    }
    auto best = canonical_solution(inst, tb);
    if (!best) {
        res.status = Status::no;
        return res;
    }
    res.status = Status::yes;
    res.ordering = *best;
    res.completion = minimal_completion(inst, *best);
    res.cost = res.completion.size();
    return res;
}

namespace {

// All triangulations of the polygon arc cycle[lo..hi] (closed by the side or
// chord lo-hi), as chord sets. Every triangulation has a unique triangle on
// the closing edge, so recursing on its apex yields each exactly once.
std::vector<std::vector<Edge>> collect_triangulations(const std::vector<int>& cycle,
                                                      int lo, int hi) {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<Edge>> out;
    auto chord_between = [&](int a, int b) {
        // consecutive polygon vertices are hole edges, not chords
        return b - a != 1 && !(a == 0 && b == int(cycle.size()) - 1);
    };
    for (int m = lo + 1; m < hi; ++m) {
        auto left = collect_triangulations(cycle, lo, m);
        auto right = collect_triangulations(cycle, m, hi);
        for (auto& lch : left)
            for (auto& rch : right) {
                std::vector<Edge> s;
                if (chord_between(lo, m))
                    s.emplace_back(std::min(cycle[lo], cycle[m]), std::max(cycle[lo], cycle[m]));
                if (chord_between(m, hi))
                    s.emplace_back(std::min(cycle[m], cycle[hi]), std::max(cycle[m], cycle[hi]));
                s.insert(s.end(), lch.begin(), lch.end());
                s.insert(s.end(), rch.begin(), rch.end());
                out.push_back(std::move(s));
            }
    }
    return out;
}

std::vector<std::vector<Edge>> branch_sets(const ForbiddenStructure& w) {
    const auto& vs = w.vertices;
    std::vector<std::vector<Edge>> out;
    auto single = [&](int a, int b) {
        out.push_back({{std::min(a, b), std::max(a, b)}});
    };
    switch (w.kind) {
        case ForbiddenStructure::Kind::claw:
            single(vs[1], vs[2]);
            single(vs[1], vs[3]);
            single(vs[2], vs[3]);
            break;
        case ForbiddenStructure::Kind::net:
            // pendant-pendant and pendant to the two foreign triangle corners
            single(vs[3], vs[4]);
            single(vs[3], vs[5]);
            single(vs[4], vs[5]);
            single(vs[3], vs[1]);
            single(vs[3], vs[2]);
            single(vs[4], vs[0]);
            single(vs[4], vs[2]);
            single(vs[5], vs[0]);
            single(vs[5], vs[1]);
            break;
        case ForbiddenStructure::Kind::tent:
            single(vs[3], vs[4]);
            single(vs[4], vs[5]);
            single(vs[5], vs[3]);
            single(vs[3], vs[2]);  // x misses c
            single(vs[4], vs[0]);  // y misses a
            single(vs[5], vs[1]);  // z misses b
            break;
        case ForbiddenStructure::Kind::hole: {
            int l = int(vs.size());
            if (l <= 12) {
                // a completed graph is chordal, and a chordal supergraph of a
                // cycle contains a full triangulation of it, so branching on
                // whole triangulations still reaches every minimum completion
                out = collect_triangulations(vs, 0, l - 1);
            } else {
                for (int i = 0; i < l; ++i)
                    for (int j = i + 2; j < l; ++j) {
                        if (i == 0 && j == l - 1) continue;
                        single(vs[i], vs[j]);
                    }
            }
            break;
        }
    }
    return out;
}

struct BaselineSearch {
    Graph cur;
    int cap;  // min(budget, current best): leaves above this are useless
    std::set<std::vector<Edge>> seen;
    int best = INT_MAX;
    std::vector<std::vector<Edge>> best_leaves;
    long long nodes = 0;

    void dfs(std::vector<Edge>& added) {
        auto key = added;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        ++nodes;
        auto w = find_forbidden_structure(cur);
        if (!w) {
            int c = int(added.size());
            if (c < best) {
                best = c;
                best_leaves.clear();
            }
            if (c == best) best_leaves.push_back(key);
            return;
        }
        if (int(added.size()) >= std::min(cap, best)) return;  // any fix overshoots
        for (auto& set : branch_sets(*w)) {
            if (int(added.size() + set.size()) > std::min(cap, best)) continue;
            bool clean = true;
            for (auto& [u, v] : set)
                if (cur.has_edge(u, v)) clean = false;  // witness is induced; holes may share chords across sets though
            if (!clean) continue;
            for (auto& [u, v] : set) cur.add_edge(u, v);
            added.insert(added.end(), set.begin(), set.end());
            dfs(added);
            added.resize(added.size() - set.size());
            for (auto& [u, v] : set) cur.remove_edge(u, v);
        }
    }
};

}  // namespace

SolveResult solve_baseline(const Graph& g, int k, const TieBreaker& tb) {
    SolveResult res;
    BaselineSearch s;
    s.cur = g;
    s.cap = k;
    std::vector<Edge> added;
    s.dfs(added);
    res.stats.branches_enumerated = s.nodes;
    if (s.best_leaves.empty()) {
        res.status = Status::no;
        return res;
    }
    // canonical pick: among minimum completions, the lex-least umbrella ordering
    std::optional<Ordering> best_ord;
    std::vector<Edge> best_f;
    for (auto& f : s.best_leaves) {
        Graph h = g;
        for (auto& [u, v] : f) h.add_edge(u, v);
        Ordering ord = canonical_umbrella_ordering(h, tb);
        if (!best_ord || lex_compare(ord, *best_ord, tb) < 0) {
            best_ord = ord;
            best_f = f;
        }
    }
    res.status = Status::yes;
    res.cost = s.best;
    res.completion.edges = best_f;
    res.completion.normalize();
    res.ordering = *best_ord;
    return res;
}

bool verify_solution(const Graph& g, const Completion& completion, int k) {
    std::set<Edge> seen;
    for (auto& [u, v] : completion.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u >= v)
            throw std::invalid_argument("verify_solution: malformed pair");
        if (g.has_edge(u, v))
            throw std::invalid_argument("verify_solution: pair already an edge of the graph");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("verify_solution: duplicate pair");
    }
    if (int(completion.edges.size()) > k) return false;
    Graph h = g;
    for (auto& [u, v] : completion.edges) h.add_edge(u, v);
    return recognize(h, TieBreaker::base(h.n)).proper_interval;
}

}  // namespace pic
