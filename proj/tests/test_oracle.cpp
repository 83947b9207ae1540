#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pic/oracle.hpp"
#include "pic/recognition.hpp"
#include "testutil.hpp"

using namespace pic;
using namespace testutil;

namespace {

SolveResult brute(const Graph& g, int k) {
    return solve_bruteforce(SpicInstance::trivial(g, k), TieBreaker::base(g.n));
}

}  // namespace

TEST_CASE("bruteforce on small zoo") {
    SUBCASE("proper interval graphs cost nothing") {
        auto r = brute(path(4), 0);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 0);
        CHECK(r.completion.size() == 0);
        REQUIRE(r.ordering);
        CHECK(*r.ordering == canonical_umbrella_ordering(path(4), TieBreaker::base(4)));
    }
    SUBCASE("C4 needs one edge") {
        CHECK(brute(cycle(4), 0).status == Status::no);
        auto r = brute(cycle(4), 1);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 1);
        CHECK(verify_solution(cycle(4), r.completion, 1));
    }
    SUBCASE("claw needs one edge") {
        CHECK(brute(claw(), 0).status == Status::no);
        auto r = brute(claw(), 1);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 1);
    }
    SUBCASE("C5 needs two edges") {
        CHECK(brute(cycle(5), 1).status == Status::no);
        auto r = brute(cycle(5), 2);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 2);
        CHECK(verify_solution(cycle(5), r.completion, 2));
    }
}

TEST_CASE("net and tent cost two each") {
    SUBCASE("net") {
        CHECK(brute(net(), 1).status == Status::no);
        auto r = brute(net(), 2);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 2);
        CHECK(r.completion.edges == std::vector<Edge>{{2, 4}, {4, 5}});
        REQUIRE(r.ordering);
        CHECK(r.ordering->sequence() == std::vector<int>{3, 0, 1, 2, 4, 5});
        CHECK(verify_solution(net(), r.completion, 2));
    }
    SUBCASE("tent") {
        CHECK(brute(tent(), 1).status == Status::no);
        auto r = brute(tent(), 2);
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 2);
        CHECK(r.completion.edges == std::vector<Edge>{{1, 5}, {4, 5}});
        REQUIRE(r.ordering);
        CHECK(r.ordering->sequence() == std::vector<int>{3, 0, 1, 2, 5, 4});
        CHECK(verify_solution(tent(), r.completion, 2));
    }
}

TEST_CASE("bruteforce refuses big instances") {
    auto r = brute(Graph(kBruteforceLimit + 1), 0);
    CHECK(r.status == Status::refused);
    CHECK(!r.note.empty());
}

TEST_CASE("baseline on small zoo") {
    TieBreaker tb6 = TieBreaker::base(6);
    SUBCASE("proper interval graphs cost nothing") {
        auto r = solve_baseline(path(5), 0, TieBreaker::base(5));
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 0);
    }
    SUBCASE("C5 at budget two") {
        auto r = solve_baseline(cycle(5), 2, TieBreaker::base(5));
        REQUIRE(r.status == Status::yes);
        CHECK(r.cost == 2);
        CHECK(verify_solution(cycle(5), r.completion, 2));
    }
    SUBCASE("net below budget says no") {
        CHECK(solve_baseline(net(), 0, tb6).status == Status::no);
        CHECK(solve_baseline(net(), 1, tb6).status == Status::no);
    }
    SUBCASE("net and tent match the frozen answers") {
        auto rn = solve_baseline(net(), 2, tb6);
        REQUIRE(rn.status == Status::yes);
        CHECK(rn.completion.edges == std::vector<Edge>{{2, 4}, {4, 5}});
        CHECK(rn.ordering->sequence() == std::vector<int>{3, 0, 1, 2, 4, 5});

        auto rt = solve_baseline(tent(), 2, tb6);
        REQUIRE(rt.status == Status::yes);
        CHECK(rt.completion.edges == std::vector<Edge>{{1, 5}, {4, 5}});
        CHECK(rt.ordering->sequence() == std::vector<int>{3, 0, 1, 2, 5, 4});
    }
}

TEST_CASE("verify_solution") {
    Completion one_chord{{{0, 2}}};
    SUBCASE("accepts a fixing completion within budget") {
        CHECK(verify_solution(cycle(4), one_chord, 1));
        CHECK(verify_solution(cycle(4), one_chord, 3));
    }
    SUBCASE("rejects budget overruns") {
        CHECK(!verify_solution(cycle(4), one_chord, 0));
    }
    SUBCASE("rejects completions that do not fix the graph") {
        CHECK(!verify_solution(net(), Completion{}, 2));
        // one chord of C5 leaves a four-cycle behind
        CHECK(!verify_solution(cycle(5), one_chord, 2));
    }
    SUBCASE("throws on overlap with existing edges") {
        Completion overlap{{{0, 1}}};
        CHECK_THROWS_AS(verify_solution(cycle(4), overlap, 1), std::invalid_argument);
    }
    SUBCASE("throws on duplicates") {
        Completion dup{{{0, 2}, {0, 2}}};
        CHECK_THROWS_AS(verify_solution(cycle(4), dup, 2), std::invalid_argument);
    }
}

TEST_CASE("baseline agrees with bruteforce on every graph up to five vertices") {
    for (int n = 1; n <= 5; ++n) {
        TieBreaker tb = TieBreaker::base(n);
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            for (int k = 0; k <= 3; ++k) {
                SolveResult want = solve_bruteforce(SpicInstance::trivial(g, k), tb);
                SolveResult got = solve_baseline(g, k, tb);
                REQUIRE(got.status == want.status);
                if (want.status != Status::yes) continue;
                REQUIRE(got.cost == want.cost);
                CHECK(got.completion.edges == want.completion.edges);
                CHECK(got.ordering->sequence() == want.ordering->sequence());
                CHECK(verify_solution(g, got.completion, k));
            }
        }
    }
}

TEST_CASE("oracle output is deterministic") {
    auto once = strip_wall_time(render_result(brute(tent(), 2)));
    auto twice = strip_wall_time(render_result(brute(tent(), 2)));
    CHECK(once == twice);
    auto b1 = strip_wall_time(render_result(solve_baseline(tent(), 2, TieBreaker::base(6))));
    auto b2 = strip_wall_time(render_result(solve_baseline(tent(), 2, TieBreaker::base(6))));
    CHECK(b1 == b2);
}
