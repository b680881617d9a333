#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "pebblelab/invariants.hpp"

using namespace pebblelab;

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Oracle: smallest dominating set by scanning all 2^n subsets.
int brute_gamma(const Graph& g) {
    int n = g.order(), best = n;
    for (VertexSet s = 1; s < bit(n); ++s) {
        VertexSet covered = 0;
        for (int v = 0; v < n; ++v)
            if (contains(s, v))
                covered |= g.closed_neighbors(v);
        if (covered == g.all_vertices())
            best = std::min(best, std::popcount(s));
    }
    return best;
}

// Oracle: Roman domination by scanning all 3^n labelings directly.
struct BruteRoman {
    int weight = 0;
    int min_n1_at_weight = 0;
};

BruteRoman brute_gamma_r(const Graph& g) {
    int n = g.order();
    std::vector<int> label(n, 0);
    BruteRoman best{3 * n, n + 1};
    while (true) {
        int w = 0, ones = 0;
        VertexSet v2 = 0;
        for (int v = 0; v < n; ++v) {
            w += label[v];
            ones += label[v] == 1;
            if (label[v] == 2)
                v2 |= bit(v);
        }
        bool valid = true;
        for (int v = 0; v < n && valid; ++v)
            if (label[v] == 0 && !(g.neighbors(v) & v2))
                valid = false;
        if (valid) {
            if (w < best.weight)
                best = {w, ones};
            else if (w == best.weight)
                best.min_n1_at_weight = std::min(best.min_n1_at_weight, ones);
        }
        int i = 0;
        while (i < n && label[i] == 2)
            label[i++] = 0;
        if (i == n)
            break;
        ++label[i];
    }
    return best;
}

} // namespace

TEST_CASE("restricted optimum on paths") {
    // pi*_2(P_n) = ceil(2n/3)
    const int expected[] = {0, 1, 2, 2, 3, 4, 4, 5, 6, 6};
    for (int n = 1; n <= 9; ++n) {
        auto r = pi_star_t(build("path:" + std::to_string(n)), 2);
        CHECK(r.value == expected[n]);
        CHECK(r.exhaustive);
        CHECK(is_solvable(build("path:" + std::to_string(n)), r.witness));
        for (auto c : r.witness.counts)
            CHECK(c <= 2);
        if (n >= 3)
            CHECK(r.value == ceil_div(2 * n, 3));
    }
}

TEST_CASE("restricted optimum is non-increasing in t") {
    for (const Graph& g : connected_corpus(5)) {
        int prev = pi_star_t(g, 1).value;
        for (int t = 2; t <= 4; ++t) {
            int cur = pi_star_t(g, t).value;
            CHECK(cur <= prev);
            prev = cur;
        }
        CHECK(pi_star(g).value <= prev);
    }
}

TEST_CASE("unrestricted optimum") {
    CHECK(pi_star(build("complete:1")).value == 1);
    CHECK(pi_star_t(build("complete:1"), 1).value == 1);
    // C4: no weight-2 configuration reaches all four vertices, (2,0,1,0) does
    auto c4 = pi_star(build("cycle:4"));
    CHECK(c4.value == 3);
    CHECK(is_solvable(build("cycle:4"), c4.witness));
    CHECK(pi_star(build("complete:4")).value == 2);
    CHECK(pi_star(build("path:4")).value == 3); // 4 pebbles on one end also works, (0,2,1,0) is lighter
}

TEST_CASE("optimum search guards") {
    CHECK_THROWS_AS(pi_star_t(build("path:4"), 0), InvalidParameters);
    CHECK_THROWS_AS(pi_star_t(Graph(3, {{0, 1}}), 2), DisconnectedGraph);
    CHECK_THROWS_AS(pi_star_t(build("path:9"), 2, SearchLimits{3, -1}), BudgetExceeded);
    CHECK_THROWS_AS(pi_star_t(build("path:9"), 2, SearchLimits{20, 1}), BudgetExceeded);
    try {
        pi_star_t(build("path:9"), 2, SearchLimits{3, -1});
    } catch (const BudgetExceeded& e) {
        CHECK(e.best_bound == 3); // weights 1..3 proved unsolvable
    }
}

TEST_CASE("classical pebbling number") {
    auto p3 = pebbling_number(build("path:3"));
    CHECK(p3.value == 4);
    CHECK(p3.lower_bound == 4); // 2^diam
    CHECK(p3.unsolvable_witness.weight() == 3);
    CHECK_FALSE(is_solvable(build("path:3"), p3.unsolvable_witness));

    CHECK(pebbling_number(build("complete:2")).value == 2);
    CHECK(pebbling_number(build("complete:4")).value == 4);
    CHECK(is_class0(build("complete:4")));
    CHECK_FALSE(is_class0(build("path:3")));
    CHECK_THROWS_AS(pebbling_number(build("grid:4x4")), BudgetExceeded); // order cap
    CHECK_THROWS_AS(pebbling_number(Graph(2, {})), DisconnectedGraph);
}

TEST_CASE("domination numbers") {
    CHECK(gamma(build("complete:5")).value == 1);
    CHECK(gamma(build("path:6")).value == 2);
    CHECK(gamma(build("cycle:7")).value == 3);
    CHECK(gamma_t(build("cycle:4")).value == 2);
    CHECK(gamma_t(build("path:6")).value == 4);
    CHECK(gamma_t(build("complete:3")).value == 2);
    CHECK_THROWS_AS(gamma_t(Graph(2, {})), InvalidParameters); // isolated vertices

    // witnesses dominate
    for (const char* spec : {"petersen", "grid:3x4", "wheel:6"}) {
        Graph g = build(spec);
        auto r = gamma(g);
        auto [open, closed] = neighborhoods(g, r.witness);
        (void)open;
        CHECK(closed == g.all_vertices());
        auto rt = gamma_t(g);
        CHECK(neighborhoods(g, rt.witness).first == g.all_vertices());
    }
}

TEST_CASE("domination against brute oracles") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_corpus(n)) {
            CHECK(gamma(g).value == brute_gamma(g));
            auto oracle = brute_gamma_r(g);
            auto r = gamma_r(g);
            CHECK(r.value == oracle.weight);
            CHECK(r.witness.valid_for(g));
            CHECK(r.witness.weight() == r.value);
            auto tie = roman_function_min_n1(g);
            CHECK(tie.valid_for(g));
            CHECK(tie.weight() == oracle.weight);
            CHECK(tie.n1() == oracle.min_n1_at_weight);
        }
}

TEST_CASE("roman domination examples") {
    CHECK(gamma_r(build("path:7")).value == 5);
    CHECK(gamma_r(build("complete:4")).value == 2);
    CHECK(gamma_r(build("cycle:6")).value == 4);
    CHECK(gamma_r(build("complete:1")).value == 1);

    auto f = roman_function_min_n1(build("path:4"));
    CHECK(f.weight() == 3);
    CHECK(f.n1() == 1);
    CHECK(std::popcount(f.v2) == 1);
}

TEST_CASE("solvable configuration search") {
    Graph k2 = build("complete:2");
    CHECK_FALSE(find_solvable(k2, 1, 1).has_value());
    auto two = find_solvable(k2, 2, 2);
    REQUIRE(two.has_value());
    CHECK(is_solvable(k2, *two));

    Graph c4 = build("cycle:4");
    auto found = find_solvable(c4, 2, 3);
    REQUIRE(found.has_value());
    CHECK(is_solvable(c4, *found));
    for (auto c : found->counts)
        CHECK(c <= 2);
    // weight 2 is too light on C4
    CHECK_FALSE(find_solvable(c4, 2, 2).has_value());

    CHECK_THROWS_AS(find_solvable(c4, 3, 3), InvalidParameters);
    // weight 6 is below the grid optimum, so the scan must hit the ceiling
    CHECK_THROWS_AS(find_solvable(build("grid:4x4"), 2, 6, 2), BudgetExceeded);
}
