#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

#include "pebblelab/graph.hpp"

using namespace pebblelab;

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{1, 0}, {0, 1}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2); // duplicate collapsed
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameters);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), InvalidParameters);
    CHECK_THROWS_AS(Graph(65, {}), InvalidParameters);
}

TEST_CASE("family orders and sizes") {
    CHECK(build("path:6").size() == 5);
    CHECK(build("cycle:5").size() == 5);
    CHECK(build("complete:5").size() == 10);
    CHECK(build("star:4").order() == 5);
    CHECK(build("wheel:5").order() == 6);
    CHECK(build("wheel:5").size() == 10);

    Graph p = build("petersen");
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);

    for (int d = 1; d <= 6; ++d) {
        Graph q = build("hypercube:" + std::to_string(d));
        CHECK(q.order() == (1 << d));
        CHECK(q.size() == d * (1 << (d - 1)));
    }
}

TEST_CASE("f family layout") {
    Graph g = build("f:3,2,4");
    CHECK(g.order() == 2 + 2 * 3 + 2 + 4);
    CHECK(g.degree(0) == 3 + 2); // hub u: i paths + j pendants
    CHECK(g.degree(1) == 3 + 4);
    CHECK_FALSE(g.adjacent(0, 1));
    // no short cycles: every member has girth 6 (or none when i = 1)
    for (auto [i, j, k] : {std::array<int, 3>{2, 0, 0}, {3, 2, 4}, {2, 1, 3}}) {
        auto gi = girth(build(FamilySpec{FamilyKind::f_family, {i, j, k}, {}}));
        REQUIRE(gi.has_value());
        CHECK(*gi == 6);
    }
    CHECK_FALSE(girth(build("f:1,1,1")).has_value()); // a tree
    CHECK_THROWS_AS(build("f:1,0,1"), InvalidParameters);
    CHECK_THROWS_AS(build("f:0,3,3"), InvalidParameters);
}

TEST_CASE("corona and neighborhood corona") {
    // corona(K1, K1) collapses to K2
    Graph k2 = build("corona:(complete:1,complete:1)");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    Graph c = build("corona:(cycle:4,complete:2)");
    CHECK(c.order() == 4 * (1 + 2));
    // each copy vertex of an ncorona hangs off the base vertex's neighbors
    Graph nc = build("ncorona:(cycle:4,complete:1)");
    CHECK(nc.order() == 8);
    for (int i = 0; i < 4; ++i) {
        int copy = 4 + i;
        CHECK(nc.degree(copy) == 2);
        CHECK(nc.neighbors(copy) == (bit((i + 1) % 4) | bit((i + 3) % 4)));
    }
    // an isolated base vertex leaves its copy unreachable
    CHECK_THROWS_AS(build("ncorona:(complete:1,complete:1)"), InvalidParameters);
}

TEST_CASE("cartesian product") {
    Graph g = cartesian_product(build("path:3"), build("path:2"));
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);

    // K1 is the identity, same numbering
    Graph h = build("cycle:5");
    Graph idp = cartesian_product(build("complete:1"), h);
    CHECK(idp.order() == h.order());
    CHECK(idp.edges() == h.edges());

    CHECK(isomorphic(build("grid:2x2"), build("cycle:4")));

    // commutative up to isomorphism
    std::vector<std::string> specs{"path:2", "path:3", "cycle:3", "complete:2", "path:4"};
    for (const auto& a : specs)
        for (const auto& b : specs) {
            Graph ga = build(a), gb = build(b);
            if (ga.order() * gb.order() > 8)
                continue;
            CHECK(canonical_key(cartesian_product(ga, gb)) ==
                  canonical_key(cartesian_product(gb, ga)));
        }
}

TEST_CASE("neighborhoods") {
    Graph c4 = build("cycle:4");
    auto [open, closed] = neighborhoods(c4, bit(0));
    CHECK(open == (bit(1) | bit(3)));
    CHECK(closed == (bit(0) | bit(1) | bit(3)));
    auto [eo, ec] = neighborhoods(c4, 0);
    CHECK(eo == 0);
    CHECK(ec == 0);
    Graph p = build("petersen");
    for (int v = 0; v < 10; ++v)
        CHECK(std::popcount(neighborhoods(p, bit(v)).first) == 3);
}

TEST_CASE("metrics") {
    for (int n : {2, 5, 9})
        CHECK(diameter(build("path:" + std::to_string(n))) == n - 1);
    Graph p = build("petersen");
    CHECK(diameter(p) == 2);
    CHECK(girth(p) == 5);
    CHECK(girth(build("cycle:7")) == 7);
    CHECK(girth(build("complete:4")) == 3);
    CHECK_FALSE(girth(build("star:5")).has_value());
    CHECK(is_connected(p));
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
    CHECK_THROWS_AS(eccentricity(Graph(3, {{0, 1}}), 0), DisconnectedGraph);
}

TEST_CASE("prufer decoding") {
    // sequence (1,2,...,n-2) decodes to a caterpillar containing P_{n-1}
    Graph t = prufer_tree({1, 2, 3});
    CHECK(t.order() == 5);
    CHECK(t.size() == 4);
    CHECK_FALSE(girth(t).has_value());
    // constant sequence gives a star
    Graph s = prufer_tree({0, 0, 0});
    CHECK(s.degree(0) == 4);
    CHECK(isomorphic(s, build("star:4")));
}

TEST_CASE("enumerate_connected counts") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto corpus = connected_corpus(n);
        CHECK(static_cast<int>(corpus.size()) == expected[n]);
        for (const Graph& g : corpus)
            CHECK(is_connected(g));
    }
    // n=3 without dedup: 4 labeled connected graphs
    int labeled = 0;
    enumerate_connected(3, false, [&](const Graph&) { ++labeled; });
    CHECK(labeled == 4);
    CHECK_THROWS_AS(enumerate_connected(8, true, [](const Graph&) {}), InvalidParameters);
}

TEST_CASE("canonical key and isomorphism agree") {
    std::mt19937 rng(11);
    auto corpus = connected_corpus(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph& g = corpus[rng() % corpus.size()];
        // relabel by a random permutation
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        Graph h(g.order(), edges);
        CHECK(canonical_key(g) == canonical_key(h));
        CHECK(isomorphic(g, h));
    }
    CHECK_FALSE(isomorphic(build("path:4"), build("star:3")));
    CHECK_FALSE(isomorphic(build("cycle:6"), build("grid:3x2")));
}

TEST_CASE("induced subgraph") {
    Graph c5 = build("cycle:5");
    std::vector<int> old_of;
    Graph sub = induced_subgraph(c5, bit(0) | bit(1) | bit(3), &old_of);
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 1); // only 0-1 survives
    CHECK(old_of == std::vector<int>{0, 1, 3});
}

TEST_CASE("spec grammar") {
    CHECK(to_string(parse_family_spec("corona:(cycle:5,complete:1)")) ==
          "corona:(cycle:5,complete:1)");
    CHECK(to_string(parse_family_spec("grid:4x5")) == "grid:4x5");
    CHECK_THROWS_AS(parse_family_spec("blob:3"), FormatError);
    CHECK_THROWS_AS(parse_family_spec("grid:4"), FormatError);
    CHECK_THROWS_AS(parse_family_spec("path:x"), FormatError);
    CHECK_THROWS_AS(build("cycle:2"), InvalidParameters);
    CHECK_THROWS_AS(build("grid:9x9"), InvalidParameters); // order 81 > 64
}

TEST_CASE("text format round trip") {
    Graph g = build("grid:3x4");
    std::stringstream buf;
    write_graph(buf, g);
    Graph back = read_graph(buf);
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());

    std::stringstream commented("# a triangle\n3 3\n0 1\n1 2\n# middle comment\n0 2\n");
    Graph tri = read_graph(commented);
    CHECK(tri.size() == 3);

    std::stringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(bad), FormatError);
    std::stringstream loops("2 1\n1 1\n");
    CHECK_THROWS_AS(read_graph(loops), FormatError);
}
