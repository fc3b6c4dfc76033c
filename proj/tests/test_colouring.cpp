#include <doctest.h>

#include <functional>
#include "cyclepart/colouring.hpp"
#include "test_util.hpp"

using namespace cyclepart;
using namespace cyclepart::testutil;

namespace {

TriColouredComplete canonical_four_partite(const std::vector<int>& sizes, uint64_t seed) {
    int n = 0;
    for (int s : sizes) n += s;
    TriColouredComplete k(n);
    std::vector<int> cls;
    for (size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) cls.push_back(static_cast<int>(i));
    auto cross = [](int a, int b) {
        int lo = std::min(a, b), hi = std::max(a, b);
        if ((lo == 0 && hi == 3) || (lo == 1 && hi == 2)) return Colour::Red;
        if ((lo == 1 && hi == 3) || (lo == 0 && hi == 2)) return Colour::Blue;
        return Colour::Green;
    };
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            k.set_colour(u, v, cls[u] == cls[v] ? static_cast<Colour>(rng.below(3))
                                                : cross(cls[u], cls[v]));
    return k;
}

// Brute-force 4-partite decision straight from the definition.
bool four_partite_brute(const TriColouredComplete& k) {
    int n = k.order();
    std::vector<int> assign(n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            FourPartition p;
            for (int u = 0; u < n; ++u) p.classes[assign[u]].push_back(u);
            for (auto& cl : p.classes)
                if (cl.empty()) return false;
            return four_partition_holds(k, p);
        }
        for (int c = 0; c < 4; ++c) {
            assign[v] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("colour_class") {
    auto k = monochromatic(4, Colour::Red);
    CHECK(colour_class(k, Colour::Red).edge_count() == 6);
    CHECK(colour_class(k, Colour::Blue).edge_count() == 0);
}

TEST_CASE("recognize_4partite on fixtures") {
    auto k = canonical_four_partite({1, 1, 1, 1}, 3);
    auto p = recognize_4partite(k);
    REQUIRE(p.has_value());
    CHECK(four_partition_holds(k, *p));

    CHECK_FALSE(recognize_4partite(monochromatic(5, Colour::Red)).has_value());

    auto k2 = canonical_four_partite({2, 2, 2, 2}, 9);
    auto p2 = recognize_4partite(k2);
    REQUIRE(p2.has_value());
    CHECK(four_partition_holds(k2, *p2));
}

TEST_CASE("recognize_4partite agrees with brute force on all K_4 colourings") {
    uint64_t total = 1;
    for (uint64_t i = 0; i < pair_count(4); ++i) total *= 3;
    for (uint64_t code = 0; code < total; ++code) {
        auto k = colouring_from_code(4, code);
        auto got = recognize_4partite(k);
        CAPTURE(code);
        CHECK(got.has_value() == four_partite_brute(k));
        if (got) CHECK(four_partition_holds(k, *got));
    }
}

TEST_CASE("recognize_4partite agrees with brute force on sampled K_5 colourings") {
    Rng rng(71);
    uint64_t total = 1;
    for (uint64_t i = 0; i < pair_count(5); ++i) total *= 3;
    for (int trial = 0; trial < 1500; ++trial) {
        auto k = colouring_from_code(5, rng.below(total));
        CHECK(recognize_4partite(k).has_value() == four_partite_brute(k));
    }
}

TEST_CASE("split_components fixtures") {
    // m disjoint triangles: S empty.
    {
        auto g = disjoint_cliques({3, 3, 3});
        auto r = split_components(g, 2, 3);
        CHECK(r.s.empty());
        CHECK(r.outcome == SplitComponentsResult::Outcome::ManyParts);
        auto r2 = split_components(g, 2, 5);
        CHECK(r2.s.empty());
        CHECK(r2.outcome == SplitComponentsResult::Outcome::AllGoodParts);
    }
    // P_9 with k=2: at most 2 cut vertices produce >= 3 components.
    {
        auto g = path_graph(9);
        auto r = split_components(g, 2, 3);
        CHECK(static_cast<int>(r.s.size()) <= 2);
        CHECK(r.outcome == SplitComponentsResult::Outcome::ManyParts);
        CHECK(r.parts.size() >= 3);
    }
    {
        auto r = split_components(Graph::complete(10), 4, 3);
        CHECK(r.s.empty());
        CHECK(r.outcome == SplitComponentsResult::Outcome::AllGoodParts);
    }
}

TEST_CASE("disconnect_or_connected fixtures") {
    {
        auto r = disconnect_or_connected(Graph::complete(8), 3, 4);
        CHECK(r.t.empty());
        CHECK(r.outcome == DisconnectResult::Outcome::KConnectedOrComplete);
    }
    {
        auto r = disconnect_or_connected(disjoint_cliques({5, 5}), 4, 3);
        CHECK(r.t.empty());
        CHECK(r.outcome == DisconnectResult::Outcome::SmallConn);
    }
    {
        auto r = disconnect_or_connected(star_graph(8), 2, 4);
        CHECK(r.outcome == DisconnectResult::Outcome::SmallConn);
        CHECK(static_cast<int>(r.t.size()) <= 8);
    }
}

TEST_CASE("disconnect_or_connected postconditions on random graphs") {
    Rng rng(73);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + static_cast<int>(rng.below(9));
        Graph g = random_graph(n, 15 + static_cast<int>(rng.below(60)), rng);
        int k = 1 + static_cast<int>(rng.below(3));
        int m = 1 + static_cast<int>(rng.below(4));
        auto r = disconnect_or_connected(g, k, m);
        CHECK(static_cast<long long>(r.t.size()) <= cd_constant(k, m));
        std::vector<char> in_t(n, 0);
        for (int v : r.t) in_t[v] = 1;
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!in_t[v]) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        auto comps = connected_components(sub.graph);
        if (r.outcome == DisconnectResult::Outcome::SmallConn) {
            size_t biggest = 0;
            for (auto& c : comps) biggest = std::max(biggest, c.size());
            CHECK(static_cast<long long>(biggest) <=
                  static_cast<long long>(rest.size()) - m);
        } else {
            bool good = rest.empty();
            if (!rest.empty()) {
                bool complete = static_cast<long long>(sub.graph.edge_count()) * 2 ==
                                static_cast<long long>(sub.graph.order()) *
                                    (sub.graph.order() - 1);
                good = complete || is_k_connected(sub.graph, k);
            }
            CHECK(good);
        }
    }
}

TEST_CASE("classify_colouring fixtures") {
    {
        auto cls = classify_colouring(monochromatic(20, Colour::Red));
        CHECK(cls.which == CaseClassification::Case::ColourConnected);
        CHECK(cls.s.empty());
        CHECK(cls.colour == Colour::Red);
        CHECK(classification_holds(monochromatic(20, Colour::Red), cls));
    }
    {
        auto k = canonical_four_partite({5, 5, 5, 5}, 5);
        auto cls = classify_colouring(k);
        CHECK(cls.which == CaseClassification::Case::FourPartite);
        CHECK(cls.s.empty());
        CHECK(classification_holds(k, cls));
    }
    {
        // Small adversarial colourings always classify validly.
        Rng rng(79);
        for (int trial = 0; trial < 40; ++trial) {
            auto k = random_colouring(4 + static_cast<int>(rng.below(10)), rng);
            auto cls = classify_colouring(k);
            CHECK(classification_holds(k, cls));
        }
    }
}
