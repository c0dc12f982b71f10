#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "snark/edge_search.hpp"
#include "snark/multipole.hpp"
#include "snark/rational.hpp"
#include "snark/superposition.hpp"

namespace snark {

/// Flow values on every edge, in the direction from end a to end b. On a
/// dangling edge that is the flow out of the multipole.
///
/// An integer (p,q)-flow has q <= |value| <= p-q and exact conservation. A
/// modular one stores residues modulo p in [q, p-q] and conserves modulo p.
/// Dividing by q gives a nowhere-zero real (resp. modular) p/q-flow. Real
/// r-flows exist iff integer (p,q)-flows do, for r = p/q.
struct PQFlow {
    int p = 0;
    int q = 0;
    bool modular = false;
    std::vector<int> values;
};

/// Value alphabet of a (p,q)-flow as used by the search rules.
class PQAlphabet {
  public:
    PQAlphabet(int p, int q, bool modular);

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] int value(int index) const { return values_.at(static_cast<std::size_t>(index)); }
    /// Index of a value; throws if it is not in the alphabet.
    [[nodiscard]] int index(int value) const;
    [[nodiscard]] const VertexRule& rule() const { return rule_; }
    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] bool modular() const { return modular_; }

  private:
    int p_, q_;
    bool modular_;
    std::vector<int> values_;
    VertexRule rule_;
};

struct PQDecision {
    std::optional<PQFlow> flow;
    std::uint64_t nodes = 0;
    /// Whether the refutation (or confirmation) came from the frontier sweep.
    bool swept = false;
};

/// Decides whether g has an integer (p,q)-flow (modular when asked). The
/// first edge is taken positive, which loses nothing since negating a flow
/// gives a flow. Throws for graphs with a bridge and for p < 2q.
PQDecision decide_pq_flow(const Graph& g, int p, int q, bool modular = false);

/// Witness of an integer (p,q)-flow, if any.
std::optional<PQFlow> has_circular_pq_flow(const Graph& g, int p, int q);

/// Witness of a modular (p,q)-flow, if any.
std::optional<PQFlow> has_modular_pq_flow(const Graph& g, int p, int q);

/// Values divided by q.
std::vector<Rational> to_rational(const PQFlow& f);

/// Residues modulo p of an integer flow.
PQFlow reduce_modulo(const PQFlow& f);

/// Exact check of a real r-flow (1 <= |v| <= r-1, exact conservation) or a
/// modular r-flow (1 <= v mod r <= r-1, conservation modulo r) at every vertex.
bool verify_flow(const Multipole& m, std::span<const Rational> values, const Rational& r, bool modular);

struct CircularFlowNumber {
    /// Smallest p/q with q <= q_max admitting a flow.
    Rational value;
    PQFlow witness;
    /// Every smaller candidate p/q (q <= q_max), all refused.
    std::vector<Rational> refused;
    int q_max = 0;
};

/// Farey candidates p/q >= 2 with q <= q_max in increasing order; the first
/// one admitting a flow. Exact only relative to q_max. Throws on bridges.
CircularFlowNumber circular_flow_number(const Graph& g, int q_max);

/// Candidate values p/q in lowest terms, 2 <= p/q <= limit, q <= q_max, increasing.
std::vector<Rational> flow_number_candidates(int q_max, const Rational& limit);

/// Boundary values (in:0, in:1, out:0, out:1) of (p,q)-flows on a (2,2)-pole.
struct FlowRelation {
    int p = 0;
    int q = 0;
    bool modular = false;
    std::set<std::array<int, 4>> tuples;
    friend bool operator==(const FlowRelation&, const FlowRelation&) = default;
};

/// Computed by a frontier sweep over the dipole.
FlowRelation flow_relation(const Dipole& d, int p, int q, bool modular);

/// Relation of the composite: the first part's output values are the negated
/// input values of the second (flow leaving one part enters the other).
FlowRelation compose_flow_relations(const FlowRelation& first, const FlowRelation& second);

/// Flow into the input connector, as a rational in (-p/2q, p/2q] for modular
/// relations and exact for integer ones.
Rational total_through(const FlowRelation& r, const std::array<int, 4>& tuple);
std::set<Rational> totals_of(const FlowRelation& r);

/// Totals through d over all modular (p,q)-flows.
std::set<Rational> modular_totals_through(const Dipole& d, int p, int q);

/// Flow relation of every superedge used by the plan, by library index. The
/// basic superedge is handled as a composite of its three Petersen parts.
std::vector<FlowRelation> superedge_flow_relations(const SuperpositionPlan& plan, int p, int q, bool modular);

struct TotalsRefutation {
    bool refuted = false;
    /// Totals per library superedge.
    std::vector<std::set<Rational>> totals;
    /// A base vertex where the signed totals cannot sum to 0 modulo p/q.
    int blocking_vertex = -1;
    /// Independent route: no choice of boundary values fits at all lifts.
    bool exhaustive_refuted = false;
    std::uint64_t exhaustive_nodes = 0;
    std::vector<std::string> steps;
    std::string assumed_lemma;
    std::string refusal;
};

/// Φ_c > 9/2 for a superposition whose superedges have modular (9,2) totals
/// in {±1/2}: three such totals never sum to 0 modulo 9/2.
TotalsRefutation refute_9_2_flow_on_superposition(const Superposition& s, const SuperpositionPlan& plan);

/// One superedge flow for each colour class, on the (14,3) scale.
struct SuperedgeFlowTemplate {
    int colour = 0;
    std::array<int, 4> boundary{};
    std::vector<int> internal;  // one value per superedge edge, dangling edges included
};

struct TemplateSet {
    std::array<SuperedgeFlowTemplate, 3> templates;
    int max_abs = 0;
};

/// Three (14,3)-flows on the superedge whose values at every lift sum to 0 when
/// each base vertex sees the inputs (or each the outputs) of three superedges
/// of distinct colours. Minimises the largest |value|, then the boundary tuples
/// lexicographically. Empty if no such triple exists.
std::optional<TemplateSet> derive_superedge_templates(const Dipole& superedge = basic_superedge());

struct FlowConstruction {
    std::optional<PQFlow> flow;
    /// "templates", "search", or empty when there is no flow.
    std::string method;
    /// How the flow was found, or why none exists.
    std::vector<std::string> steps;
    std::uint64_t nodes = 0;
};

/// A (14,3)-flow on the superposition: templates by colour class when every
/// base vertex is all-tail or all-head; otherwise (or if that fails) a complete
/// search over superedge boundary relations, which may show that none exists.
/// Throws unless colouring is a proper 3-edge-colouring of the base graph.
FlowConstruction construct_14_3_flow(const Superposition& s, const SuperpositionPlan& plan, std::span<const int> colouring);

/// Internal flow on d with the given boundary values, if any.
std::optional<std::vector<int>> complete_dipole_flow(const Dipole& d, const PQAlphabet& alphabet, const std::array<int, 4>& boundary);

}  // namespace snark
