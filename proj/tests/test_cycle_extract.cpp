#include <doctest.h>

#include "cyclepart/cycle_extract.hpp"
#include "cyclepart/degree.hpp"
#include "cyclepart/oracle.hpp"
#include "test_util.hpp"

using namespace cyclepart;
using namespace cyclepart::testutil;

TEST_CASE("cycle_simple fixtures") {
    CHECK(cycle_simple(Graph(0, {})).kind() == Cycle::Kind::Empty);
    CHECK(cycle_simple(disjoint_cliques({3, 3})).kind() == Cycle::Kind::Empty);

    Graph k5 = Graph::complete(5);
    Cycle c = cycle_simple(k5);
    CHECK(validate_cycle(k5, c));
    CHECK(remainder_bound_holds(k5, c, BoundKind::half()));
}

TEST_CASE("cycle_sparse fixtures") {
    CHECK(cycle_sparse(disjoint_cliques({2, 2})).kind() == Cycle::Kind::Empty);

    Graph star = star_graph(3);
    Cycle c = cycle_sparse(star);
    CHECK(c.kind() == Cycle::Kind::Vertex);
    CHECK(c.seq[0] == 0);

    Graph k2 = Graph::complete(2);
    Cycle c2 = cycle_sparse(k2);
    CHECK(remainder_bound_holds(k2, c2, BoundKind::half_minus_one()));
}

TEST_CASE("cycle extractors exhaustive n <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (uint64_t code = 0; code < (1ull << pair_count(n)); ++code) {
            Graph g = graph_from_code(n, code);
            CAPTURE(n);
            CAPTURE(code);
            Cycle cs = cycle_simple(g);
            CHECK(validate_cycle(g, cs));
            CHECK(remainder_bound_holds(g, cs, BoundKind::half()));
            Cycle cp = cycle_sparse(g);
            CHECK(validate_cycle(g, cp));
            CHECK(remainder_bound_holds(g, cp, BoundKind::half_minus_one()));
        }
}

TEST_CASE("cycle_sparse sampled n = 8 with oracle agreement") {
    Rng rng(51);
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = random_graph(8, 20 + static_cast<int>(rng.below(60)), rng);
        Cycle c = cycle_sparse(g);
        CHECK(remainder_bound_holds(g, c, BoundKind::half_minus_one()));
        if (trial % 40 == 0) {
            auto bf = best_cycle_bruteforce(g, BoundKind::half_minus_one());
            CHECK(bf.satisfiable);
        }
    }
}
