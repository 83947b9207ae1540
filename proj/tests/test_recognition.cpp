#include <algorithm>
#include <random>

#include "doctest.h"
#include "pic/recognition.hpp"
#include "testutil.hpp"

using namespace pic;
using namespace testutil;

namespace {

// reference: try all n! orderings, keep the lex-min umbrella one
std::optional<Ordering> bruteforce_canonical(const Graph& g, const TieBreaker& tb) {
    std::vector<int> seq(g.n);
    for (int i = 0; i < g.n; ++i) seq[i] = i;
    std::optional<Ordering> best;
    do {
        Ordering ord = Ordering::from_sequence(g.n, seq);
        if (!has_umbrella_property(g, ord)) continue;
        if (!best || lex_compare(ord, *best, tb) < 0) best = ord;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

Graph from_mask(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit)) g.add_edge(i, j);
    return g;
}

bool witness_checks_out(const Graph& g, const ForbiddenStructure& w) {
    const auto& vs = w.vertices;
    auto adj = [&](int i, int j) { return g.has_edge(vs[i], vs[j]); };
    switch (w.kind) {
        case ForbiddenStructure::Kind::claw:
            return vs.size() == 4 && adj(0, 1) && adj(0, 2) && adj(0, 3) && !adj(1, 2) &&
                   !adj(1, 3) && !adj(2, 3);
        case ForbiddenStructure::Kind::net:
            return vs.size() == 6 && adj(0, 1) && adj(1, 2) && adj(0, 2) && adj(0, 3) &&
                   adj(1, 4) && adj(2, 5) && !adj(3, 4) && !adj(3, 5) && !adj(4, 5) &&
                   !adj(1, 3) && !adj(2, 3) && !adj(0, 4) && !adj(2, 4) && !adj(0, 5) &&
                   !adj(1, 5);
        case ForbiddenStructure::Kind::tent:
            return vs.size() == 6 && adj(0, 1) && adj(1, 2) && adj(0, 2) && adj(3, 0) &&
                   adj(3, 1) && adj(4, 1) && adj(4, 2) && adj(5, 2) && adj(5, 0) &&
                   !adj(3, 4) && !adj(4, 5) && !adj(3, 5) && !adj(3, 2) && !adj(4, 0) &&
                   !adj(5, 1);
        case ForbiddenStructure::Kind::hole: {
            if (vs.size() < 4) return false;
            int l = int(vs.size());
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    bool ring = (j == i + 1) || (i == 0 && j == l - 1);
                    if (adj(i, j) != ring) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("recognition on the basic zoo") {
    TieBreaker tb3 = TieBreaker::base(3);

    auto k3 = recognize(complete(3), tb3);
    CHECK(k3.proper_interval);
    REQUIRE(k3.canonical);
    CHECK(k3.canonical->sequence() == std::vector<int>{0, 1, 2});

    auto cl = recognize(claw(), TieBreaker::base(4));
    CHECK(!cl.proper_interval);
    REQUIRE(cl.witness);
    CHECK(cl.witness->kind == ForbiddenStructure::Kind::claw);

    auto c4 = recognize(cycle(4), TieBreaker::base(4));
    CHECK(!c4.proper_interval);
    REQUIRE(c4.witness);
    CHECK(c4.witness->kind == ForbiddenStructure::Kind::hole);
    CHECK(c4.witness->vertices.size() == 4);
}

TEST_CASE("forbidden structure detection") {
    CHECK(!find_forbidden_structure(path(5)));

    auto n = find_forbidden_structure(net());
    REQUIRE(n);
    CHECK(n->kind == ForbiddenStructure::Kind::net);

    auto t = find_forbidden_structure(tent());
    REQUIRE(t);
    CHECK(t->kind == ForbiddenStructure::Kind::tent);

    auto h = find_forbidden_structure(cycle(6));
    REQUIRE(h);
    CHECK(h->kind == ForbiddenStructure::Kind::hole);
    CHECK(h->vertices.size() == 6);
}

TEST_CASE("witnesses induce what they claim") {
    std::mt19937 rng(4242);
    int found = 0;
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(rng, 7, 0.35);
        auto w = find_forbidden_structure(g);
        if (!w) continue;
        ++found;
        CHECK(witness_checks_out(g, *w));
        // and the witness really is obstructing: the induced subgraph on its
        // vertices is not proper interval
        Graph sub = g.induced(w->vertices);
        CHECK(!recognize(sub, TieBreaker::base(sub.n)).proper_interval);
    }
    CHECK(found > 100);  // the sample would be useless otherwise
}

TEST_CASE("canonical umbrella ordering examples") {
    Graph edgeless(3);
    CHECK(canonical_umbrella_ordering(edgeless, TieBreaker::base(3)).sequence() ==
          std::vector<int>{0, 1, 2});

    CHECK(canonical_umbrella_ordering(path(3), TieBreaker::base(3)).sequence() ==
          std::vector<int>{0, 1, 2});

    // K2 + K1: brute force agrees
    Graph g(3);
    g.add_edge(1, 2);
    TieBreaker tb = TieBreaker::base(3);
    auto best = bruteforce_canonical(g, tb);
    REQUIRE(best);
    CHECK(canonical_umbrella_ordering(g, tb) == *best);

    CHECK_THROWS_AS(canonical_umbrella_ordering(cycle(4), TieBreaker::base(4)),
                    std::invalid_argument);
}

TEST_CASE("recognition agrees with brute force") {
    // every labeled graph on up to 5 vertices
    for (int n = 1; n <= 5; ++n) {
        TieBreaker tb = TieBreaker::base(n);
        unsigned masks = 1u << (n * (n - 1) / 2);
        for (unsigned mask = 0; mask < masks; ++mask) {
            Graph g = from_mask(n, mask);
            auto brute = bruteforce_canonical(g, tb);
            auto rec = recognize(g, tb);
            REQUIRE(rec.proper_interval == bool(brute));
            if (brute) {
                CHECK(*rec.canonical == *brute);
                CHECK(has_umbrella_property(g, *rec.canonical));
            } else {
                REQUIRE(rec.witness);
                CHECK(witness_checks_out(g, *rec.witness));
            }
        }
    }

    // seeded samples at 6 and 7
    std::mt19937 rng(99);
    for (int t = 0; t < 900; ++t) {
        int n = 6 + t % 2;
        Graph g = random_graph(rng, n, t % 3 == 0 ? 0.65 : 0.45);
        TieBreaker tb = TieBreaker::base(n);
        auto brute = bruteforce_canonical(g, tb);
        auto rec = recognize(g, tb);
        REQUIRE(rec.proper_interval == bool(brute));
        if (brute) CHECK(*rec.canonical == *brute);
    }
}

TEST_CASE("twin classes") {
    auto k3 = twin_classes(complete(3));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == std::vector<int>{0, 1, 2});

    auto p3 = twin_classes(path(3));
    CHECK(p3.size() == 3);

    // twin classes sit consecutively in any canonical ordering
    std::mt19937 rng(55);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_staircase(rng, 3 + t % 6);
        Ordering ord = canonical_umbrella_ordering(g, TieBreaker::base(g.n));
        for (const auto& cls : twin_classes(g)) {
            int lo = g.n + 1, hi = 0;
            for (int v : cls) {
                lo = std::min(lo, ord.position(v));
                hi = std::max(hi, ord.position(v));
            }
            CHECK(hi - lo + 1 == int(cls.size()));
        }
    }
}
