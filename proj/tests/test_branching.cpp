#include <algorithm>
#include <set>

#include "doctest.h"
#include "pic/branching.hpp"
#include "pic/oracle.hpp"
#include "testutil.hpp"

using namespace pic;
using namespace testutil;

TEST_CASE("threshold values") {
    CHECK(compute_threshold(0).value == 0);
    CHECK(compute_threshold(1).value == 2);
    CHECK(compute_threshold(2).value == 2);
    CHECK(compute_threshold(3).value == 2);
    CHECK(compute_threshold(4).value == 2);
    CHECK(compute_threshold(5).value == 3);
    CHECK(compute_threshold(32).value == 4);
    for (int k = 1; k <= 200; ++k) {
        long long t = compute_threshold(k).value;
        CHECK(t * t * t >= 2 * k);
        CHECK((t - 1) * (t - 1) * (t - 1) < 2 * k);
    }
}

TEST_CASE("build_sandwich on the 4-star") {
    // center 0 guessed expensive at position 3 with neighborhood span [2,5]
    Graph g = star(4);
    ExpensiveGuess guess;
    guess.verts = {0};
    guess.p = {3};
    guess.pl = {2};
    guess.pr = {5};

    auto br = build_sandwich(guess, g, 2);
    REQUIRE(br);
    CHECK(br->original_n == 5);
    CHECK(br->h_verts == std::vector<int>{1, 2, 3, 4});
    CHECK(br->pos_map == std::vector<int>{1, 2, 4, 5});
    CHECK(br->sigma_dollar == std::vector<std::pair<int, int>>{{0, 3}});
    CHECK(br->f_dollar.empty());
    // the window has three free slots for four leaves, so the guess itself
    // pays for one fewer edge than the center already has
    CHECK(br->cost_offset == -1);
    CHECK(br->spic.budget == 3);

    br->spic.validate();
    CHECK(br->spic.n() == 4);
    CHECK(br->spic.g.edge_count() == 0);

    // every leaf is a neighbor of the center, so it must land inside the span
    for (int i = 0; i < 4; ++i) CHECK(br->spic.sigma[i].members() == std::vector<int>{1, 2, 3});

    // positions 4 and 5 sit right of the center inside its span: forced edge
    CHECK(br->spic.down.has_edge(2, 3));
    CHECK(br->spic.down.edge_count() == 1);
    // a pair straddling the center from outside its span may not be adjacent
    CHECK(!br->spic.up.has_edge(0, 2));
    CHECK(!br->spic.up.has_edge(0, 3));
    CHECK(br->spic.up.has_edge(0, 1));
    CHECK(br->spic.up.has_edge(1, 2));
}

TEST_CASE("build_sandwich cleanup rules") {
    SUBCASE("over-budget guesses are named") {
        // middle of P6 with a span four wide but only two real neighbors
        Graph g = path(6);
        ExpensiveGuess guess;
        guess.verts = {2};
        guess.p = {3};
        guess.pl = {1};
        guess.pr = {5};
        std::string why;
        auto full = build_sandwich(guess, g, 2, &why);
        REQUIRE(full);
        CHECK(full->cost_offset == 2);
        CHECK(full->spic.budget == 0);
        CHECK(!build_sandwich(guess, g, 1, &why));
        CHECK(why == "budget");
    }
    SUBCASE("position outside its own window") {
        ExpensiveGuess guess;
        guess.verts = {0};
        guess.p = {1};
        guess.pl = {2};
        guess.pr = {3};
        CHECK(!build_sandwich(guess, path(3), 3));
    }
    SUBCASE("adjacent guesses with non-touching windows") {
        ExpensiveGuess guess;
        guess.verts = {0, 1};
        guess.p = {1, 4};
        guess.pl = {1, 4};
        guess.pr = {1, 4};
        CHECK(!build_sandwich(guess, path(4), 6));
    }
}

TEST_CASE("enumerate_branches") {
    Graph g = cycle(5);
    int k = 2;
    Threshold tau = compute_threshold(k);
    CeilingCounter ceiling(1'000'000, "guesses");
    auto branches = enumerate_branches(g, k, tau, ceiling);
    REQUIRE(!branches.empty());

    SUBCASE("the trivial branch comes first") {
        const BranchInstance& b0 = branches.front();
        CHECK(b0.guess.size() == 0);
        CHECK(b0.cost_offset == 0);
        CHECK(b0.spic.budget == k);
        CHECK(b0.h_verts == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(b0.pos_map == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(b0.spic.g.edge_count() == g.edge_count());
        CHECK(b0.spic.down.edge_count() == 0);
        CHECK(b0.spic.up.edge_count() == 5 * 4 / 2);
    }

    SUBCASE("branch invariants hold throughout") {
        size_t prev_size = 0;
        for (const BranchInstance& br : branches) {
            CHECK(br.guess.size() >= int(prev_size));
            prev_size = br.guess.size();
            CHECK(std::is_sorted(br.guess.verts.begin(), br.guess.verts.end()));
            CHECK(br.spic.budget == k - br.cost_offset);
            CHECK(br.spic.budget >= 0);
            br.spic.validate();

            // guessed and free positions partition 1..n
            std::set<int> seen(br.pos_map.begin(), br.pos_map.end());
            for (int p : br.guess.p) CHECK(seen.insert(p).second);
            CHECK(int(seen.size()) == g.n);
            CHECK(*seen.begin() == 1);
            CHECK(*seen.rbegin() == g.n);
            CHECK(std::is_sorted(br.pos_map.begin(), br.pos_map.end()));

            // same for the vertices themselves
            std::set<int> verts(br.h_verts.begin(), br.h_verts.end());
            for (int v : br.guess.verts) CHECK(verts.insert(v).second);
            CHECK(int(verts.size()) == g.n);

            // windows are sane and the guess pays what the formula says
            int slack = 0;
            for (int i = 0; i < br.guess.size(); ++i) {
                CHECK(br.guess.pl[i] <= br.guess.p[i]);
                CHECK(br.guess.p[i] <= br.guess.pr[i]);
                CHECK(br.guess.pl[i] >= 1);
                CHECK(br.guess.pr[i] <= g.n);
                slack += (br.guess.pr[i] - br.guess.pl[i]) - g.degree(br.guess.verts[i]);
            }
            CHECK(br.cost_offset == slack - int(br.f_dollar.size()));
            for (auto [u, v] : br.f_dollar) {
                CHECK(!g.has_edge(u, v));
                CHECK(std::binary_search(br.guess.verts.begin(), br.guess.verts.end(), u));
                CHECK(std::binary_search(br.guess.verts.begin(), br.guess.verts.end(), v));
            }

            // the cheap side really is the induced subgraph
            Graph sub = g.induced(br.h_verts);
            CHECK(br.spic.g.edge_count() == sub.edge_count());
            for (auto [u, v] : sub.edges()) CHECK(br.spic.g.has_edge(u, v));
        }
    }

    SUBCASE("a tiny ceiling trips") {
        CeilingCounter tiny(3, "guesses");
        CHECK_THROWS_AS(enumerate_branches(cycle(7), 5, compute_threshold(5), tiny),
                        CeilingExceeded);
    }
}

TEST_CASE("lift_solution") {
    SUBCASE("through the trivial branch it is the identity") {
        CeilingCounter ceiling(1'000'000, "guesses");
        auto branches = enumerate_branches(path(4), 1, compute_threshold(1), ceiling);
        Ordering ord = Ordering::from_sequence(4, {2, 0, 1, 3});
        CHECK(lift_solution(branches.front(), ord) == ord);
    }
    SUBCASE("guessed vertices land on their guessed positions") {
        Graph g = star(4);
        ExpensiveGuess guess;
        guess.verts = {0};
        guess.p = {3};
        guess.pl = {1};  // span wide enough that all four leaves fit inside
        guess.pr = {5};
        auto br = build_sandwich(guess, g, 2);
        REQUIRE(br);
        auto sol = canonical_solution(br->spic, TieBreaker::base(br->spic.n()));
        REQUIRE(sol);
        Ordering lifted = lift_solution(*br, *sol);
        CHECK(lifted.is_total());
        CHECK(lifted.position(0) == 3);
        for (int i = 0; i < 4; ++i)
            CHECK(lifted.position(br->h_verts[i]) == br->pos_map[sol->position(i) - 1]);

        // lifting an umbrella ordering of the sandwich keeps the budget honest
        SpicInstance full = SpicInstance::trivial(g, 3);
        CHECK(cost(full, lifted) <= br->cost_offset + cost(br->spic, *sol));
    }
}

TEST_CASE("every optimal ordering of a cheap graph survives in the trivial branch") {
    // when no vertex needs many incident edges the empty guess already wins;
    // solving the trivial branch must reproduce the oracle
    for (const Graph& g : {cycle(4), claw(), path(5)}) {
        int k = 1;
        CeilingCounter ceiling(1'000'000, "guesses");
        auto branches = enumerate_branches(g, k, compute_threshold(k), ceiling);
        TieBreaker tb = TieBreaker::base(g.n);
        auto via_branch = canonical_solution(branches.front().spic, tb);
        SolveResult want = solve_bruteforce(SpicInstance::trivial(g, k), tb);
        REQUIRE(via_branch);
        REQUIRE(want.status == Status::yes);
        CHECK(lift_solution(branches.front(), *via_branch) == *want.ordering);
    }
}
