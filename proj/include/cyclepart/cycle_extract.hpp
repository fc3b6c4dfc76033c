#pragma once

#include "cyclepart/degree.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// Cycle with 2*Delta(G\C) <= |G\C|.
Cycle cycle_simple(const Graph& g);

// Cycle with 2*Delta(G\C) <= |G\C|-1 (empty remainder passes by convention).
Cycle cycle_sparse(const Graph& g);

}  // namespace cyclepart
