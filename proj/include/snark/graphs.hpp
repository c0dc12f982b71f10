#pragma once

#include <optional>
#include <string_view>

#include "snark/multipole.hpp"

namespace snark {

// Named graphs with fixed labellings.

/// Outer cycle 0..4 (edges i,i+1), spokes i,i+5, inner pentagram i+5,(i+2)%5+5.
/// Edge order: outer cycle, spokes, pentagram.
Graph petersen();
/// Vertices 0..3, edges in lexicographic order.
Graph k4();
/// Sides {0,1,2} and {3,4,5}, edges (i, 3+j) in lexicographic order.
Graph k33();
/// Two vertices and three parallel edges.
Graph theta();
/// Triangles 0,1,2 and 3,4,5 with rungs i,i+3.
Graph prism();
/// The 3-cube on bitmasks 0..7.
Graph cube();

/// Looks up one of the names above ("petersen", "k4", "k33", "theta", "prism", "cube").
std::optional<Graph> builtin_graph(std::string_view name);

}  // namespace snark
