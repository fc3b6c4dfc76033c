#pragma once

#include <functional>
#include <optional>

#include "cyclepart/degree.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// Yields every cycle of g exactly once: the empty cycle, every vertex, every
// edge, and every proper cycle in canonical orientation (smallest vertex
// first, smaller second neighbour). Deterministic order. Guarded to n <= 14.
void enumerate_cycles(const Graph& g, const std::function<void(const Cycle&)>& yield);

std::vector<Cycle> all_cycles(const Graph& g);

struct BruteForceResult {
    Cycle best;               // minimizes 2*Delta(G\C); ties: larger |C|, then lex
    DegreeBound achieved;     // 2*Delta(G\best)
    bool satisfiable = false; // whether ANY cycle meets the requested bound
};

BruteForceResult best_cycle_bruteforce(const Graph& g, const BoundKind& b);

// Every simple path with one endpoint in a and the other in b (each
// unordered path once; single vertices of a∩b included). n <= 14 guard.
void enumerate_paths_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const std::function<void(const Path&)>& yield);

// K_m ⊔ (K_{m+1} minus the edge uv); A = V(K_m)+u, B = V(K_m)+v.
struct PathExtremal {
    Graph graph;
    VertexSet a, b;
};
PathExtremal gen_path_extremal(int m);

// k+1 copies of K_m plus k extra vertices; all edges present except between
// distinct copies.
Graph gen_connected_extremal(int k, int m);

// Structures of the dense-complement classifier.
struct DenseSplit {        // (i): |A| = |B|+1, A independent, all A-B edges present
    VertexSet a, b;
};
struct DensePivot {        // (ii): G-v = two equal cliques A, B; G[A+v], G[B+v] complete
    int pivot;
    VertexSet a, b;
};
struct DenseClassification {
    enum class Kind { Split, Pivot, Hamiltonian } kind;
    DenseSplit split;      // valid when kind == Split
    DensePivot pivot;      // valid when kind == Pivot
    Cycle hamiltonian;     // valid when kind == Hamiltonian
};

// Requires 2*delta(G) >= |G|-1; searches (i), (ii) structurally, then (iii)
// by exact Hamiltonian search (n <= 14 guard for that branch on hard inputs).
DenseClassification classify_dense_complement(const Graph& g);

// Exact checks used to verify classifier witnesses.
bool dense_split_holds(const Graph& g, const DenseSplit& s);
bool dense_pivot_holds(const Graph& g, const DensePivot& p);

// Exact Hamiltonian cycle search (bitmask DP with a greedy fast path);
// empty optional if none. Degenerate conventions: n=0 -> empty cycle,
// n=1 -> vertex, n=2 with an edge -> edge cycle.
std::optional<Cycle> find_hamiltonian_cycle(const Graph& g);

// Rotation-extension heuristic: a long (possibly degenerate) cycle of g.
std::vector<int> long_cycle_heuristic(const Graph& g);

}  // namespace cyclepart
