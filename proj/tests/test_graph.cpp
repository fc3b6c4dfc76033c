#include <doctest.h>

#include "cyclepart/graph.hpp"
#include "cyclepart/oracle.hpp"
#include "test_util.hpp"

using namespace cyclepart;
using namespace cyclepart::testutil;

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
}

TEST_CASE("induced subgraph") {
    Graph k4 = Graph::complete(4);
    VertexSet all{0, 1, 2, 3};
    auto same = induced_subgraph(k4, all);
    CHECK(same.graph.order() == 4);
    CHECK(same.graph.edge_count() == 6);

    auto empty = induced_subgraph(k4, {});
    CHECK(empty.graph.order() == 0);

    Graph p4 = path_graph(4);
    auto pair = induced_subgraph(p4, {0, 2});
    CHECK(pair.graph.order() == 2);
    CHECK(pair.graph.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(k4, {0, 9}), InvalidInput);
}

TEST_CASE("connected components") {
    Graph g = disjoint_cliques({3, 2});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4});

    CHECK(connected_components(Graph(0, {})).empty());
    CHECK(connected_components(Graph(5, {})).size() == 5);
}

TEST_CASE("max degree convention") {
    CHECK(max_degree(Graph(0, {})).doubled == -1);
    CHECK(max_degree(Graph::complete(5)).doubled == 8);
    CHECK(max_degree(star_graph(3)).doubled == 6);
}

TEST_CASE("cycle validation") {
    Graph k4 = Graph::complete(4);
    CHECK(validate_cycle(k4, Cycle{{0, 1, 2}}));
    CHECK(validate_cycle(k4, Cycle::empty_cycle()));
    CHECK(validate_cycle(k4, Cycle::vertex(2)));
    CHECK(validate_cycle(k4, Cycle::edge(1, 3)));
    Graph p3 = path_graph(3);
    CHECK_FALSE(validate_cycle(p3, Cycle{{0, 1, 2}}));  // 0-2 missing
    CHECK_FALSE(validate_cycle(p3, Cycle::edge(0, 2)));
    CHECK_FALSE(validate_cycle(k4, Cycle{{0, 1, 1}}));
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(vertex_connectivity(disjoint_cliques({2, 2})) == 0);
    CHECK(vertex_connectivity(star_graph(4)) == 1);
    CHECK(vertex_connectivity(gen_connected_extremal(2, 3)) == 2);
    CHECK(vertex_connectivity(gen_connected_extremal(1, 3)) == 1);

    CHECK(is_k_connected(Graph::complete(5), 4));
    CHECK_FALSE(is_k_connected(cycle_graph(6), 3));
    CHECK(is_k_connected(cycle_graph(6), 2));
}

TEST_CASE("connectivity agrees with brute force on small graphs") {
    // Exhaustive over all 5-vertex graphs: compare with cut enumeration.
    for (uint64_t code = 0; code < (1ull << pair_count(5)); ++code) {
        Graph g = graph_from_code(5, code);
        int kappa = vertex_connectivity(g);
        // Brute force: smallest set whose removal leaves >= 2 components;
        // n-1 for complete graphs.
        int brute = -1;
        if (g.edge_count() == 10) brute = 4;
        for (int size = 0; size <= 3 && brute < 0; ++size) {
            for (uint32_t m = 0; m < 32 && brute < 0; ++m) {
                if (__builtin_popcount(m) != size) continue;
                VertexSet keep;
                for (int v = 0; v < 5; ++v)
                    if (!(m >> v & 1)) keep.push_back(v);
                auto sub = induced_subgraph(g, keep);
                if (connected_components(sub.graph).size() >= 2) brute = size;
            }
        }
        if (brute < 0) brute = 4;
        CAPTURE(code);
        CHECK(kappa == brute);
    }
}

TEST_CASE("components partition the vertex set") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(10, 25, rng);
        auto comps = connected_components(g);
        std::vector<char> seen(10, 0);
        int total = 0;
        for (auto& c : comps)
            for (int v : c) {
                CHECK_FALSE(seen[v]);
                seen[v] = 1;
                ++total;
            }
        CHECK(total == 10);
    }
}

TEST_CASE("induced subgraph max degree is monotone") {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        Graph g = random_graph(n, 20 + static_cast<int>(rng.below(60)), rng);
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) s.push_back(v);
        if (s.empty()) s.push_back(static_cast<int>(rng.below(n)));
        auto sub = induced_subgraph(g, s);
        CHECK(max_degree(sub.graph).doubled <= max_degree(g).doubled);
    }
}
