#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "snark/edge_search.hpp"
#include "snark/multipole.hpp"

namespace snark {

/// A vertex order for frontier sweeps: greedy, always taking the vertex with
/// most edges into the processed part, from the start vertex that gives the
/// smallest maximum cut.
std::vector<int> frontier_order(const Multipole& m);

/// Largest number of edges crossing between processed and unprocessed
/// vertices (dangling edges count once their vertex is processed).
int frontier_width(const Multipole& m, std::span<const int> order);

struct FrontierStats {
    int width = 0;
    std::size_t peak_states = 0;
};

struct FrontierResult {
    /// Every tuple of values on the dangling edges, in dangling_edges() order,
    /// that extends to an assignment satisfying the rule at every vertex.
    /// Sorted. A graph yields {{}} when an assignment exists and {} otherwise.
    std::vector<std::vector<int>> boundary;
    FrontierStats stats;
};

/// Dynamic programming over the vertex order: the state is the tuple of
/// values on the current cut. Restrictions limit edge domains (edge, mask).
/// Throws std::length_error if more than max_states states are alive at once.
FrontierResult boundary_assignments(const Multipole& m, const VertexRule& rule,
                                    std::span<const std::pair<int, Mask>> restrictions = {},
                                    std::size_t max_states = 20'000'000);

bool assignment_exists(const Multipole& m, const VertexRule& rule,
                       std::span<const std::pair<int, Mask>> restrictions = {});

}  // namespace snark
