#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snark/edge_search.hpp"
#include "snark/multipole.hpp"
#include "snark/tetra.hpp"

namespace snark {

/// One point of T per edge, dangling edges included.
using TetraFlow = std::vector<Point>;

/// Required points on some dangling edges, by label.
using BoundaryCondition = std::map<std::string, Point, std::less<>>;

/// Vertex rule on dense point indices of T: the three values form a line of T.
const VertexRule& tetra_rule(const Tetrahedron& t);

struct TetraFlowResult {
    std::optional<TetraFlow> flow;
    SearchStats stats;
};

/// Some T-flow on m, or none after exhausting the search. The first vertex's
/// line is fixed up to corner permutations, which loses no solutions.
TetraFlowResult find_tetra_flow(const Multipole& m, const Tetrahedron& t = Tetrahedron::canonical());

/// Streams every T-flow extending the boundary condition in a fixed order
/// until visit returns false. Returns the search statistics.
SearchStats enumerate_tetra_flows(const Multipole& m, const Tetrahedron& t, const BoundaryCondition& boundary,
                                  const std::function<bool(const TetraFlow&)>& visit);

std::uint64_t count_tetra_flows(const Multipole& m, const Tetrahedron& t = Tetrahedron::canonical(),
                                const BoundaryCondition& boundary = {});

/// Whether some T-flow has the given points on the given edges (edge index -> point).
bool tetra_flow_exists(const Multipole& m, const Tetrahedron& t, std::span<const std::pair<int, Point>> fixed);

/// Every value in T and every vertex sees a line of T.
bool is_valid_tetra_flow(const Multipole& m, const Tetrahedron& t, std::span<const Point> flow);

/// Dangling edges carrying a midpoint. Throws if the flow is invalid.
int heavy_dangling_count(const Multipole& m, const Tetrahedron& t, std::span<const Point> flow);

}  // namespace snark
