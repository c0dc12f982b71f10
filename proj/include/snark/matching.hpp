#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snark/multipole.hpp"
#include "snark/tetra.hpp"
#include "snark/tetra_flow.hpp"

namespace snark {

/// Edge indices of a perfect matching, ascending.
using PerfectMatching = std::vector<int>;

/// An ordered list of perfect matchings whose union is E(G).
using Cover = std::vector<PerfectMatching>;

/// All perfect matchings. The lowest uncovered vertex is matched first,
/// trying its edges by index, so the order is fixed.
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g);

bool is_perfect_matching(const Graph& g, std::span<const int> edges);
bool is_cover(const Graph& g, const Cover& cover);

struct PerfectMatchingIndex {
    /// Smallest cover size found, or empty when it exceeds the cap.
    std::optional<int> value;
    Cover certificate;
    int cap = 0;
    std::uint64_t matchings = 0;
    /// Search nodes over all cover sizes tried; identical for any thread count.
    std::uint64_t nodes = 0;
};

/// Smallest k <= cap such that k perfect matchings cover E. Throws for graphs
/// with a bridge, or cap < 3.
PerfectMatchingIndex perfect_matching_index(const Graph& g, int cap = 5);

/// Edge e gets the point whose i-th coordinate is 1 exactly when e is not in
/// the i-th matching, in the corner basis of t. Throws unless the cover has
/// exactly four valid members.
TetraFlow cover_to_flow(const Graph& g, const Cover& cover, const Tetrahedron& t = Tetrahedron::canonical());

/// Inverse of cover_to_flow: a corner c_i lies in matching i only, a midpoint
/// c_k + c_l in the two other matchings. Throws for an invalid flow.
Cover flow_to_cover(const Graph& g, std::span<const Point> flow, const Tetrahedron& t = Tetrahedron::canonical());

/// Ordered 4-tuples of perfect matchings covering E.
std::uint64_t count_ordered_four_covers(const Graph& g);

}  // namespace snark
