#pragma once

#include <iosfwd>
#include <string>

#include "cyclepart/colouring.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// GraphFile: header "n m", then m lines "u v" with 0 <= u < v < n,
// no duplicates. Throws InvalidInput on malformed input.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// ColouringFile: header "n", then n(n-1)/2 lines "u v c" with c in {R,B,G},
// every unordered pair exactly once.
TriColouredComplete read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const TriColouredComplete& k);

Graph read_graph_file(const std::string& path);
TriColouredComplete read_colouring_file(const std::string& path);

}  // namespace cyclepart
