#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "snark/multipole.hpp"
#include "snark/rational.hpp"
#include "snark/transitions.hpp"

namespace snark {

/// Petersen graph minus the adjacent vertices 0 and 5. The two former
/// neighbours of 0 (vertices 1, 4) carry the input, those of 5 (7, 8) the output.
Dipole petersen_decollineator();

/// The default cycle pair for petersen_q_dipole: 0-1-2-3-4 and 0-1-2-7-5.
inline constexpr std::array<int, 5> q_cycle_outer{0, 1, 2, 3, 4};
inline constexpr std::array<int, 5> q_cycle_inner{0, 1, 2, 7, 5};

/// Petersen graph severed along two 5-cycles that share a 2-path (see q_dipole_from).
Dipole petersen_q_dipole(const std::array<int, 5>& c1 = q_cycle_outer, const std::array<int, 5>& c2 = q_cycle_inner);

/// decollineator ∘ Q-dipole ∘ decollineator, 26 vertices.
Dipole basic_superedge();

/// Where the dangling edges of one superedge go. Base edge (a, b) sends the
/// input of its superedge to the lifts of a and the output to the lifts of b;
/// in:i goes to lift input_lift[i], out:i to lift output_lift[i].
struct SuperedgeAttachment {
    int superedge = 0;  // index into the plan's library
    std::array<int, 2> input_lift{0, 1};
    std::array<int, 2> output_lift{0, 1};
};

struct SuperpositionPlan {
    Graph base;
    std::vector<Dipole> library;
    std::vector<SuperedgeAttachment> edges;  // one per base edge
};

/// Every base edge gets library[0] with dangling i attached to lift i.
SuperpositionPlan canonical_plan(Graph base, Dipole superedge = basic_superedge());

struct Superposition {
    Graph graph;
    /// Number of lift vertices; lift i of base vertex v is vertex 2v + i.
    int lift_count = 0;
    /// First vertex of each superedge copy.
    std::vector<int> superedge_offset;
    /// Per base edge: graph edge index of every superedge edge, by superedge edge index.
    std::vector<std::vector<int>> edge_map;
    /// Per base edge: graph edges made from in:0, in:1, out:0, out:1.
    std::vector<std::array<int, 4>> boundary_edges;
};

/// Builds the graph for a plan without checking heaviness. Throws on plan
/// errors: wrong edge count, unknown superedge, a non-(2,2) superedge, or an
/// attachment that is not a bijection onto the two lifts.
Superposition assemble_superposition(const SuperpositionPlan& plan);

/// assemble_superposition after checking that every superedge used is heavy.
Superposition heavy_superposition(const SuperpositionPlan& plan);

struct SuperedgeHeaviness {
    int superedge = 0;
    ShapeRelation shapes;
    bool within_heavy_transitions = false;
    bool heavy = false;
    std::size_t boundary_tuples = 0;
};

/// Per-superedge heaviness plus the counting summary behind the bound.
struct HeavinessCertificate {
    std::vector<SuperedgeHeaviness> superedges;
    int base_vertices = 0;
    int base_edges = 0;
};

HeavinessCertificate certify_heaviness(const SuperpositionPlan& plan);

struct PmiVerdict {
    bool at_least_five = false;
    /// Midpoint-valued edges at the lifts in any T-flow: one per lift.
    int heavy_boundary_edges = 0;
    /// heavy_boundary_edges / number of superedges; below 2 means no T-flow.
    Rational average_per_superedge{0};
    std::vector<std::string> steps;
    std::string refusal;
};

/// π >= 5 by counting: each lift sees one line of T, which has exactly one
/// midpoint, so 2n edges at lifts are heavy; heavy superedges need 2m of them;
/// 2n < 2m. Refuses when a step cannot be checked.
PmiVerdict certify_pmi_at_least_5(const Superposition& s, const SuperpositionPlan& plan, const HeavinessCertificate& cert);

}  // namespace snark
