#include "pic/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>

#include "pic/recognition.hpp"
#include "pic/sections.hpp"

namespace pic {

namespace {

struct BranchOutcome {
    std::optional<Ordering> ord;  // lifted back onto the component's vertices
    int cost = INT_MAX;
    SolveStats stats;
    bool refused = false;
    std::string note;
};

BranchOutcome run_branch(const Graph& g, const BranchInstance& br, const Threshold& tau,
                         const TieBreaker& tb, int budget, long long ceiling_limit) {
    BranchOutcome out;
    CeilingCounter ceiling(ceiling_limit, "branch pipeline");
    SpicInstance plain = SpicInstance::trivial(g, budget);

    auto consider = [&](const Ordering& lifted) {
        auto c = completion_cost(plain, lifted);
        if (!c || *c > budget) return;
        if (!out.ord || *c < out.cost ||
            (*c == out.cost && lex_compare(lifted, *out.ord, tb) < 0)) {
            out.ord = lifted;
            out.cost = *c;
        }
    };

    try {
        if (br.spic.n() == 0) {
            // every vertex was guessed expensive; the guess is the ordering
            consider(lift_solution(br, Ordering(0)));
            return out;
        }
        TieBreaker tb_h = TieBreaker::base(br.spic.n());
        auto triples = enumerate_twin_triples(br, g, tau, tb_h, ceiling);
        auto sections = enumerate_sections(br, triples);
        out.stats.sections += int(sections.size());

        AugmentedInstance aug = augment(br.spic);
        auto aug_sections = augment_sections(aug, sections);
        TieBreaker tb_aug = aug.tie_breaker();
        auto family = enumerate_jump_family(aug.base, aug_sections, tau, tb_aug, ceiling, out.stats);
        auto full = layer_one_dp(aug, family, aug_sections, tau, tb_aug, ceiling, out.stats);
        if (full) consider(lift_solution(br, strip_augmentation(aug, *full)));
    } catch (const CeilingExceeded& e) {
        out.refused = true;
        out.note = e.what();
    }
    return out;
}

SolveResult solve_component(const Graph& g, const SolveOptions& opt) {
    SolveResult res;
    TieBreaker tb = TieBreaker::base(g.n);

    auto rec = recognize(g, tb);
    if (rec.proper_interval) {
        res.status = Status::yes;
        res.cost = 0;
        res.ordering = *rec.canonical;
        return res;
    }
    if (opt.budget == 0) {
        res.status = Status::no;
        return res;
    }

    Threshold tau =
        opt.tau_override >= 0 ? Threshold{opt.tau_override} : compute_threshold(opt.budget);

    std::vector<BranchInstance> branches;
    try {
        CeilingCounter guess_ceiling(opt.ceiling, "expensive-vertex guessing");
        branches = enumerate_branches(g, opt.budget, tau, guess_ceiling);
    } catch (const CeilingExceeded& e) {
        res.status = Status::refused;
        res.note = e.what();
        return res;
    }
    res.stats.branches_enumerated += int(branches.size());

    // cheapest guesses first; a whole wave is skipped once its mandatory
    // offset alone exceeds the best cost seen
    std::vector<int> order(branches.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return branches[a].cost_offset < branches[b].cost_offset;
    });

    std::optional<Ordering> best;
    int best_cost = INT_MAX;

    size_t at = 0;
    while (at < order.size()) {
        int wave_offset = branches[order[at]].cost_offset;
        if (best && wave_offset > best_cost) break;
        size_t end = at;
        while (end < order.size() && branches[order[end]].cost_offset == wave_offset) ++end;

        std::vector<BranchOutcome> outcomes(end - at);
        int workers = std::min<int>(std::max(opt.jobs, 1), int(end - at));
        if (workers <= 1) {
            for (size_t i = at; i < end; ++i)
                outcomes[i - at] =
                    run_branch(g, branches[order[i]], tau, tb, opt.budget, opt.ceiling);
        } else {
            std::atomic<size_t> next{at};
            auto pull = [&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= end) return;
                    outcomes[i - at] =
                        run_branch(g, branches[order[i]], tau, tb, opt.budget, opt.ceiling);
                }
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(pull);
            for (auto& th : pool) th.join();
        }

        for (auto& oc : outcomes) {
            res.stats += oc.stats;
            if (oc.refused) {
                res.status = Status::refused;
                res.note = oc.note;
                return res;
            }
            if (oc.ord &&
                (!best || oc.cost < best_cost ||
                 (oc.cost == best_cost && lex_compare(*oc.ord, *best, tb) < 0))) {
                best = oc.ord;
                best_cost = oc.cost;
            }
        }
        at = end;
    }

    if (!best) {
        res.status = Status::no;
        return res;
    }
    res.status = Status::yes;
    res.cost = best_cost;
    res.ordering = best;
    res.completion = minimal_completion(SpicInstance::trivial(g, opt.budget), *best);
    return res;
}

}  // namespace

SolveResult solve_fpt(const Graph& g, const SolveOptions& opt) {
    auto comps = g.components();
    if (comps.size() == 1 && int(comps[0].size()) == g.n) {
        SolveResult res = solve_component(g, opt);
        if (res.status == Status::yes) res.completion.normalize();
        return res;
    }

    // components are independent: no optimal completion joins two of them
    SolveResult total;
    total.status = Status::yes;
    total.cost = 0;
    total.ordering = Ordering(g.n);
    int remaining = opt.budget;
    int offset = 0;
    for (const auto& verts : comps) {
        Graph sub = g.induced(verts);
        SolveOptions sub_opt = opt;
        sub_opt.budget = remaining;
        SolveResult part = solve_component(sub, sub_opt);
        total.stats += part.stats;
        if (part.status == Status::refused) {
            total.status = Status::refused;
            total.note = part.note;
            total.ordering.reset();
            return total;
        }
        if (part.status == Status::no) {
            total.status = Status::no;
            total.cost = -1;
            total.ordering.reset();
            total.completion = Completion{};
            return total;
        }
        total.cost += part.cost;
        remaining -= part.cost;
        for (int v = 0; v < sub.n; ++v)
            total.ordering->place(verts[v], offset + part.ordering->position(v));
        for (auto [x, y] : part.completion.edges) {
            int gx = verts[x], gy = verts[y];
            total.completion.edges.emplace_back(std::min(gx, gy), std::max(gx, gy));
        }
        offset += sub.n;
    }
    total.completion.normalize();
    return total;
}

}  // namespace pic
