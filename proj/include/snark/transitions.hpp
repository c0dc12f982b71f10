#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snark/multipole.hpp"
#include "snark/tetra.hpp"

namespace snark {

/// A binary relation on shapes.
class ShapeRelation {
  public:
    ShapeRelation() = default;
    ShapeRelation(std::initializer_list<std::pair<Shape, Shape>> pairs);

    void insert(Shape from, Shape to) { bits_.set(slot(from, to)); }
    [[nodiscard]] bool contains(Shape from, Shape to) const { return bits_.test(slot(from, to)); }
    [[nodiscard]] bool subset_of(const ShapeRelation& other) const { return (bits_ & ~other.bits_).none(); }
    [[nodiscard]] std::size_t size() const { return bits_.count(); }
    [[nodiscard]] bool empty() const { return bits_.none(); }
    [[nodiscard]] std::vector<std::pair<Shape, Shape>> pairs() const;

    /// "s->t" tokens in lexicographic order.
    [[nodiscard]] std::vector<std::string> tokens() const;
    static ShapeRelation parse(std::span<const std::string> tokens);

    friend ShapeRelation operator-(const ShapeRelation& a, const ShapeRelation& b) {
        ShapeRelation r;
        r.bits_ = a.bits_ & ~b.bits_;
        return r;
    }
    friend bool operator==(const ShapeRelation&, const ShapeRelation&) = default;

  private:
    static std::size_t slot(Shape from, Shape to) {
        return static_cast<std::size_t>(from) * 6 + static_cast<std::size_t>(to);
    }
    std::bitset<36> bits_;
};

/// {(p, t) : (p, s) in first and (s, t) in second for some s}.
ShapeRelation compose_relations(const ShapeRelation& first, const ShapeRelation& second);

/// The transitions any (2,2)-pole can have.
ShapeRelation admissible_transitions();
/// Admissible transitions without the collinear ones hl->hl and ls->ls.
ShapeRelation decollineator_transitions();
/// Transitions of a dipole cut from a graph along two 5-cycles sharing a 2-path.
ShapeRelation q_transitions();
/// Transitions of the heavy superedge; every dipole inside them is heavy.
ShapeRelation heavy_transitions();

/// Values on in:0, in:1, out:0, out:1.
using BoundaryTuple = std::array<Point, 4>;

/// The boundary tuples realised by T-flows on a (2,2)-pole, ordered by connector position.
class BoundaryRelation {
  public:
    BoundaryRelation() = default;
    explicit BoundaryRelation(std::set<BoundaryTuple> tuples) : tuples_(std::move(tuples)) {}

    [[nodiscard]] const std::set<BoundaryTuple>& tuples() const { return tuples_; }
    [[nodiscard]] bool contains(const BoundaryTuple& x) const { return tuples_.contains(x); }
    [[nodiscard]] std::size_t size() const { return tuples_.size(); }
    [[nodiscard]] bool empty() const { return tuples_.empty(); }

    friend bool operator==(const BoundaryRelation&, const BoundaryRelation&) = default;

  private:
    std::set<BoundaryTuple> tuples_;
};

/// The relation of a composite, from the relations of its parts: the output
/// values of the first part must equal the input values of the second.
BoundaryRelation compose_boundaries(const BoundaryRelation& first, const BoundaryRelation& second);

/// Unordered pair of points of T; x <= y, equal for a degenerate pair.
struct PointPair {
    Point x, y;
    PointPair(Point a, Point b) : x(std::min(a, b)), y(std::max(a, b)) {}
    friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

struct PairTransition {
    PointPair input, output;
    friend auto operator<=>(const PairTransition&, const PairTransition&) = default;
};

struct Transitions {
    BoundaryRelation boundary;
    std::set<PairTransition> pairs;
    ShapeRelation shapes;
    /// Existence queries run (one per symmetry class of boundary tuples).
    std::uint64_t queries = 0;
};

/// Pair and shape levels of a boundary relation.
Transitions transitions_of(BoundaryRelation boundary, const Tetrahedron& t = Tetrahedron::canonical());

/// Boundary tuples of d, one existence query per orbit under corner
/// permutations. Throws unless d is a (2,2)-pole.
BoundaryRelation boundary_relation(const Dipole& d, const Tetrahedron& t = Tetrahedron::canonical());

Transitions transition_relation(const Dipole& d, const Tetrahedron& t = Tetrahedron::canonical());

/// No transition with both pairs collinear (ls or hl), checked on boundary pairs.
bool is_decollineator(const Transitions& tr, const Tetrahedron& t = Tetrahedron::canonical());
bool is_decollineator(const Dipole& d);
/// No ang->ang transition.
bool is_deangulator(const Transitions& tr);
bool is_deangulator(const Dipole& d);
/// Every T-flow has at least two dangling edges with a midpoint value.
bool is_heavy(const Transitions& tr, const Tetrahedron& t = Tetrahedron::canonical());
bool is_heavy(const Dipole& d);
/// Shape relation inside the admissible transitions.
bool admissibility_check(const Transitions& tr);
bool admissibility_check(const Dipole& d);

/// Two adjacent new vertices, one on the inputs and one on the outputs.
Graph decollineator_to_graph(const Dipole& d);

/// Severs the edge of c1 and the edge of c2 that avoid the shared 2-path of
/// two 5-cycles (given as vertex sequences). Both halves of the c1 edge form
/// the input; both halves of the c2 edge the output. Throws if the cycles do
/// not meet in exactly a path of length 2, or if the result has a transition
/// outside q_transitions() (which means the graph was not a suitable snark).
Dipole q_dipole_from(const Graph& g, const std::array<int, 5>& c1, const std::array<int, 5>& c2);

}  // namespace snark
