#pragma once

#include <optional>

#include "cyclepart/graph.hpp"

namespace cyclepart {

// Partition of V(G) into edge-disconnected halves of sizes floor(n/2), ceil(n/2).
struct BalancedSplit {
    VertexSet x, y;  // |x| = floor(n/2), |y| = ceil(n/2)
};

// Witness for one of the four low-degree structures, each of which forces
// 2*Delta(H) <= |H|-1.
struct StructureWitness {
    enum class Tag {
        BalancedComponents,  // (i)
        NearBalancedSplit,   // (ii): |X| <= |Y| <= |X|+3, Delta(Y) < |Y|-1
        OddPivot,            // (iii): odd |H|, pivot v, H-v balanced
        PivotFourWay,        // (iv): X, Y1, Y2, {v}
    };
    Tag tag;
    VertexSet x, y;   // (i),(ii): the split; (iii): split of H-v; (iv): X and Y1
    VertexSet y2;     // (iv) only
    int pivot = -1;   // (iii),(iv)
};

// Target inequality on the remainder H = G \ C, in doubled-integer form.
struct BoundKind {
    enum class Tag { Half, HalfMinusOne, Connected };
    Tag tag = Tag::Half;
    int k = 0;  // Connected only, k >= 1

    static BoundKind half() { return {Tag::Half, 0}; }
    static BoundKind half_minus_one() { return {Tag::HalfMinusOne, 0}; }
    static BoundKind connected(int k) {
        if (k < 1) throw InvalidInput("Connected bound requires k >= 1");
        return {Tag::Connected, k};
    }
};

// delta2 = 2*Delta(H) (-1 for empty H), hsize = |H|.
inline bool bound_holds_doubled(int delta2, int hsize, const BoundKind& b) {
    switch (b.tag) {
        case BoundKind::Tag::Half: return delta2 <= hsize;
        case BoundKind::Tag::HalfMinusOne: return delta2 <= hsize - 1;
        case BoundKind::Tag::Connected:
            return (b.k + 1) * delta2 <= 2 * hsize + 6 * (b.k + 1);
    }
    return false;
}

std::optional<BalancedSplit> has_balanced_components(const Graph& g);

// Sufficiency-only search for structures (i)-(iv), in that order; a returned
// witness is re-verified and implies 2*Delta(H) <= |H|-1. "nullopt" does not
// imply the degree bound fails.
std::optional<StructureWitness> check_structure(const Graph& h);

// Exact verification of a specific witness, including the degree conclusion.
bool structure_holds(const Graph& h, const StructureWitness& w);

bool remainder_bound_holds(const Graph& g, const Cycle& c, const BoundKind& b);

// V(G) minus the cycle's vertices, sorted.
VertexSet remainder_set(const Graph& g, const Cycle& c);

// 2*Delta of G[s] (-1 when s is empty).
int induced_max_degree2(const Graph& g, const VertexSet& s);

}  // namespace cyclepart
