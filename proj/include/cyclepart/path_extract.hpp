#pragma once

#include "cyclepart/degree.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// A-to-B path with 2*Delta(G\P) <= |G\P|.
// Requires 2|A| >= |G|, 2|B| > |G|, nonempty G.
Path path_simple(const Graph& g, const VertexSet& a, const VertexSet& b);

// A-to-B path with 2*Delta(G\P) <= |G\P|-1.
// Requires |G| >= 2, G without balanced components, 2|A| >= |G|-1, 2|B| >= |G|.
Path path_main(const Graph& g, const VertexSet& a, const VertexSet& b);

// The near-balanced helper: G-v has balanced components, 2 d(v) >= |G|-2,
// v in A, 2|A| >= |G|-1, 2|B| >= |G|-1, |G| >= 4, G itself not balanced.
Path path_one_special(const Graph& g, int v, const VertexSet& a, const VertexSet& b);

// Two-vertex variant: G-{u,v} has balanced components, uv an edge,
// 2 d(v) >= |G|-1, u in A, v outside A and B, |A|,|B| >= (|G|-1)/2,
// max(|A|,|B|) >= |G|/2, |G| >= 4, G itself not balanced.
Path path_two_special(const Graph& g, int u, int v, const VertexSet& a, const VertexSet& b);

}  // namespace cyclepart
