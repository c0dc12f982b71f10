#pragma once

#include <optional>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

/// Length of a shortest cycle; 2 when there are parallel edges. Throws for
/// acyclic input.
int girth(const Graph& g);

/// A proper 3-edge-colouring (colours 0..2 per edge), if one exists.
std::optional<std::vector<int>> three_edge_colouring(const Multipole& m);
bool is_three_edge_colourable(const Multipole& m);

/// True iff no edge cut with fewer than k edges leaves two components that both
/// contain a cycle. Graphs without such a cut at all satisfy this for every k.
bool cyclic_connectivity_at_least(const Graph& g, int k);

/// A smallest cycle-separating cut of size < limit, if any (edge indices).
std::optional<std::vector<int>> small_cycle_separating_cut(const Graph& g, int limit);

bool is_connected(const Multipole& m);
bool has_bridge(const Graph& g);

}  // namespace snark
