#pragma once

#include <vector>

#include "snark/multipole.hpp"

namespace snark {

/// Connected simple cubic graphs on n vertices, one per isomorphism class,
/// sorted by canonical form. Intended for n <= 12.
std::vector<Graph> connected_cubic_graphs(int n);

/// The bridgeless members of connected_cubic_graphs(n) for every even n in
/// [4, max_vertices], by increasing order.
std::vector<Graph> bridgeless_cubic_census(int max_vertices);

}  // namespace snark
