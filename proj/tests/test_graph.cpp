#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "pic/graph.hpp"
#include "pic/ordering.hpp"
#include "testutil.hpp"

using namespace pic;
using namespace testutil;

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
    CHECK(!g.has_edge(3, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    g.remove_edge(0, 1);
    CHECK(!g.has_edge(0, 1));
    CHECK(g.edge_count() == 1);

    Bits nb = g.closed_neighborhood(1);
    CHECK(nb.test(1));
    CHECK(nb.test(2));
    CHECK(!nb.test(0));
}

TEST_CASE("components and induced subgraphs") {
    Graph g(6);
    g.add_edge(4, 5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[1] == std::vector<int>{1, 2, 3});
    CHECK(comps[2] == std::vector<int>{4, 5});

    Graph sub = g.induced({1, 2, 3});
    CHECK(sub.n == 3);
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 2));
    CHECK(!sub.has_edge(0, 2));
}

TEST_CASE("edge list parsing") {
    SUBCASE("accepts comments and blank lines") {
        std::istringstream in("# a graph\n\n4 2\n0 1\n\n# chord\n2 3\n");
        Graph g = read_edge_list(in);
        CHECK(g.n == 4);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(2, 3));
    }
    SUBCASE("rejects malformed headers") {
        std::istringstream in("banana\n");
        CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
    }
    SUBCASE("rejects duplicate edges") {
        std::istringstream in("3 2\n0 1\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
    }
    SUBCASE("rejects out-of-range endpoints") {
        std::istringstream in("3 1\n0 3\n");
        CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
    }
    SUBCASE("rejects missing edges") {
        std::istringstream in("3 2\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
    }
    SUBCASE("round trips through the writer") {
        Graph g = net();
        std::istringstream in(write_edge_list(g));
        CHECK(read_edge_list(in) == g);
    }
}

TEST_CASE("ordering plumbing") {
    Ordering ord(4);
    CHECK(!ord.is_total());
    ord.place(2, 1);
    ord.place(0, 3);
    CHECK(ord.contains(2));
    CHECK(!ord.contains(1));
    CHECK(ord.position(0) == 3);
    CHECK(ord.domain_size() == 2);
    CHECK(ord.vertex_at(1) == 2);
    CHECK(ord.vertex_at(2) == -1);
    CHECK(ord.sequence() == std::vector<int>{2, 0});

    Ordering full = Ordering::from_sequence(3, {2, 0, 1});
    CHECK(full.position(2) == 1);
    CHECK(full.position(0) == 2);
    CHECK(full.position(1) == 3);
}

TEST_CASE("umbrella property examples") {
    // path in path order
    CHECK(has_umbrella_property(path(3), identity_order(3)));

    // C4 in cyclic order: edge 0-3 spans 1 and 2 but 1-3 is missing
    CHECK(!has_umbrella_property(cycle(4), identity_order(4)));

    // complete graphs pass under every ordering
    Graph k4 = complete(4);
    std::vector<int> seq{0, 1, 2, 3};
    do {
        CHECK(has_umbrella_property(k4, Ordering::from_sequence(4, seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("umbrella predicate agrees with the triple definition") {
    // exhaustive on 4 vertices: every graph, every ordering
    for (int mask = 0; mask < (1 << 6); ++mask) {
        Graph g(4);
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
                if (mask & (1 << bit)) g.add_edge(i, j);
        std::vector<int> seq{0, 1, 2, 3};
        do {
            Ordering ord = Ordering::from_sequence(4, seq);
            CHECK(has_umbrella_property(g, ord) == umbrella_by_triples(g, ord));
        } while (std::next_permutation(seq.begin(), seq.end()));
    }

    // seeded samples at 5 and 6
    std::mt19937 rng(133);
    for (int t = 0; t < 2000; ++t) {
        int n = 5 + t % 2;
        Graph g = random_graph(rng, n, 0.4);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i;
        std::shuffle(seq.begin(), seq.end(), rng);
        Ordering ord = Ordering::from_sequence(n, seq);
        CHECK(has_umbrella_property(g, ord) == umbrella_by_triples(g, ord));
    }
}

TEST_CASE("induced graph relabels by position") {
    Graph p3 = path(3);

    SUBCASE("identity keeps the graph") {
        CHECK(induced_graph(p3, identity_order(3)) == p3);
    }
    SUBCASE("K3 maps to K3") {
        CHECK(induced_graph(complete(3), Ordering::from_sequence(3, {2, 0, 1})) == complete(3));
    }
    SUBCASE("P3 with the middle first") {
        // order (b, a, c): edges land on position pairs (1,2) and (1,3)
        Graph img = induced_graph(p3, Ordering::from_sequence(3, {1, 0, 2}));
        CHECK(img.has_edge(0, 1));
        CHECK(img.has_edge(0, 2));
        CHECK(!img.has_edge(1, 2));
    }
    SUBCASE("umbrella carries over to the image under identity") {
        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            Graph g = random_graph(rng, 6, 0.5);
            std::vector<int> seq{0, 1, 2, 3, 4, 5};
            std::shuffle(seq.begin(), seq.end(), rng);
            Ordering ord = Ordering::from_sequence(6, seq);
            CHECK(has_umbrella_property(g, ord) ==
                  has_umbrella_property(induced_graph(g, ord), identity_order(6)));
        }
    }
}

TEST_CASE("lex comparison") {
    TieBreaker tb = TieBreaker::base(3);

    Ordering a = Ordering::from_sequence(3, {0, 1, 2});
    CHECK(lex_compare(a, a, tb) == 0);

    // two vertices: placing vertex 0 first is smaller
    TieBreaker tb2 = TieBreaker::base(2);
    Ordering x(2), y(2);
    x.place(0, 1);
    x.place(1, 2);
    y.place(0, 2);
    y.place(1, 1);
    CHECK(lex_compare(x, y, tb2) == -1);
    CHECK(lex_compare(y, x, tb2) == 1);

    // sequences (1,3,2) vs (1,2,3)
    Ordering c(3), d(3);
    c.place(0, 1);
    c.place(1, 3);
    c.place(2, 2);
    d.place(0, 1);
    d.place(1, 2);
    d.place(2, 3);
    CHECK(lex_compare(c, d, tb) == 1);

    // mismatched domains are a caller bug
    Ordering partial(3);
    partial.place(0, 1);
    CHECK_THROWS_AS(lex_compare(partial, a, tb), std::logic_error);
}

TEST_CASE("tie breaker construction") {
    TieBreaker tb = TieBreaker::base(4);
    CHECK(tb.order == std::vector<int>{0, 1, 2, 3});
    CHECK(tb.rank == std::vector<int>{0, 1, 2, 3});

    TieBreaker custom = TieBreaker::from_order({2, 0, 1});
    CHECK(custom.rank[2] == 0);
    CHECK(custom.rank[0] == 1);
    CHECK(custom.rank[1] == 2);
}

TEST_CASE("completion normalization") {
    Completion c;
    c.edges = {{3, 1}, {0, 2}, {1, 3}, {2, 0}};
    c.normalize();
    CHECK(c.edges == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(c.size() == 2);
}
