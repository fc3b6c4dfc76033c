#include <doctest.h>

#include "cyclepart/degree.hpp"
#include "test_util.hpp"

using namespace cyclepart;
using namespace cyclepart::testutil;

namespace {

// Independent decision: exhaustively test all floor(n/2)-subsets for an
// edge-free cut.
bool balanced_brute(const Graph& g) {
    int n = g.order();
    for (uint32_t m = 0; m < (1u << n); ++m) {
        if (__builtin_popcount(m) != n / 2) continue;
        bool cross = false;
        for (int u = 0; u < n && !cross; ++u) {
            if (!(m >> u & 1)) continue;
            for (int v : g.neighbours(u)) cross = cross || !(m >> v & 1);
        }
        if (!cross) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("balanced components on fixtures") {
    auto two_triangles = disjoint_cliques({3, 3});
    auto split = has_balanced_components(two_triangles);
    REQUIRE(split.has_value());
    CHECK(split->x.size() == 3);
    CHECK(split->y.size() == 3);

    CHECK_FALSE(has_balanced_components(Graph::complete(4)).has_value());

    // K_3 u K_2 u K_1 groups {K_2, K_1} against {K_3}.
    auto mixed = disjoint_cliques({3, 2, 1});
    auto ms = has_balanced_components(mixed);
    REQUIRE(ms.has_value());
    CHECK(ms->x.size() == 3);
    CHECK(balanced_brute(mixed));
}

TEST_CASE("balanced components agree with brute force exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for (uint64_t code = 0; code < (1ull << pair_count(n)); ++code) {
            Graph g = graph_from_code(n, code);
            auto got = has_balanced_components(g);
            CAPTURE(n);
            CAPTURE(code);
            CHECK(got.has_value() == balanced_brute(g));
            if (got) {
                CHECK(static_cast<int>(got->x.size()) == n / 2);
                std::vector<char> iny(n, 0);
                for (int v : got->y) iny[v] = 1;
                for (int v : got->x)
                    for (int u : g.neighbours(v)) CHECK_FALSE(iny[u]);
            }
        }
}

TEST_CASE("balanced components agree with brute force on random n<=12") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 7 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, 12 + static_cast<int>(rng.below(30)), rng);
        CHECK(has_balanced_components(g).has_value() == balanced_brute(g));
    }
}

TEST_CASE("check_structure fixtures") {
    auto s1 = check_structure(disjoint_cliques({3, 3}));
    REQUIRE(s1.has_value());
    CHECK(s1->tag == StructureWitness::Tag::BalancedComponents);

    // C_5 plus an isolated vertex: |Y| = |X| + 4 breaks (ii); none acceptable.
    {
        std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
        Graph g(6, edges);
        auto s = check_structure(g);
        if (s) CHECK(structure_holds(g, *s));
    }

    // Structure (iii): star K_{1,3} with pivot = centre has |H| even, no; use
    // P_3 plus isolated pair: odd 5-vertex graph with a low-degree pivot.
    {
        Graph g(5, {{0, 1}, {1, 2}});  // path 0-1-2, isolated 3, 4
        auto s = check_structure(g);
        REQUIRE(s.has_value());
        CHECK(structure_holds(g, *s));
    }
}

TEST_CASE("every returned structure witness satisfies the degree conclusion") {
    for (int n = 1; n <= 6; ++n)
        for (uint64_t code = 0; code < (1ull << pair_count(n)); ++code) {
            Graph g = graph_from_code(n, code);
            auto s = check_structure(g);
            if (s) {
                CHECK(structure_holds(g, *s));
                CHECK(max_degree(g).doubled <= n - 1);
            }
        }
}

TEST_CASE("remainder bounds in doubled arithmetic") {
    Graph k4 = Graph::complete(4);
    CHECK(remainder_bound_holds(k4, Cycle{{0, 1, 2, 3}}, BoundKind::half_minus_one()));

    Graph star = star_graph(3);
    CHECK(remainder_bound_holds(star, Cycle::vertex(0), BoundKind::half_minus_one()));

    Graph two_triangles = disjoint_cliques({3, 3});
    CHECK_FALSE(
        remainder_bound_holds(two_triangles, Cycle{{0, 1, 2}}, BoundKind::half_minus_one()));

    CHECK_THROWS_AS(remainder_bound_holds(k4, Cycle::edge(0, 9), BoundKind::half()),
                    InvalidInput);

    // HalfMinusOne implies Half.
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(7, 40, rng);
        Cycle c = Cycle::empty_cycle();
        if (remainder_bound_holds(g, c, BoundKind::half_minus_one()))
            CHECK(remainder_bound_holds(g, c, BoundKind::half()));
    }

    // Empty remainder passes every bound.
    CHECK(remainder_bound_holds(k4, Cycle{{0, 1, 2, 3}}, BoundKind::connected(3)));
}

TEST_CASE("connected bound arithmetic") {
    // Delta <= |H|/(k+1) + 3 in doubled units.
    CHECK(bound_holds_doubled(-1, 0, BoundKind::connected(2)));
    CHECK(bound_holds_doubled(2 * 5, 10, BoundKind::connected(1)));   // 5 <= 5+3
    CHECK_FALSE(bound_holds_doubled(2 * 9, 10, BoundKind::connected(1)));  // 9 > 8
}

TEST_CASE("structure search is sufficiency-only on the lopsided fixture") {
    // A vertex joined to three vertices of one triangle of 2K_3: the (iii)
    // budget fails when d(v) exceeds (|H|-1)/2 on the relevant splitration.
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                                           {6, 0}, {6, 1}, {6, 2}, {6, 3}};
    Graph g(7, edges);
    auto s = check_structure(g);
    // Whatever the search returns must verify; none is acceptable.
    if (s) CHECK(structure_holds(g, *s));
}
