#pragma once

#include <cstdint>
#include <vector>

#include "cyclepart/colouring.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart::testutil {

// Graph from an edge-code over the n(n-1)/2 pairs in lex order.
inline Graph graph_from_code(int n, uint64_t code) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (code >> bit & 1) edges.push_back({u, v});
    return Graph(n, edges);
}

inline uint64_t pair_count(int n) { return static_cast<uint64_t>(n) * (n - 1) / 2; }

inline Graph disjoint_cliques(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (int s : sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) edges.push_back({base + u, base + v});
        base += s;
    }
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return Graph(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

// Colouring of K_n from a base-3 code over pairs in lex order.
inline TriColouredComplete colouring_from_code(int n, uint64_t code) {
    TriColouredComplete k(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            k.set_colour(u, v, static_cast<Colour>(code % 3));
            code /= 3;
        }
    return k;
}

inline TriColouredComplete monochromatic(int n, Colour c) {
    TriColouredComplete k(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) k.set_colour(u, v, c);
    return k;
}

// Deterministic xorshift for test sampling.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

inline Graph random_graph(int n, int percent, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<uint64_t>(percent)) edges.push_back({u, v});
    return Graph(n, edges);
}

inline TriColouredComplete random_colouring(int n, Rng& rng) {
    TriColouredComplete k(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) k.set_colour(u, v, static_cast<Colour>(rng.below(3)));
    return k;
}

}  // namespace cyclepart::testutil
