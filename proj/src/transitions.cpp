#include "snark/transitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "snark/parallel.hpp"
#include "snark/tetra_flow.hpp"

namespace snark {

ShapeRelation::ShapeRelation(std::initializer_list<std::pair<Shape, Shape>> pairs) {
    for (auto [a, b] : pairs) insert(a, b);
}

std::vector<std::pair<Shape, Shape>> ShapeRelation::pairs() const {
    std::vector<std::pair<Shape, Shape>> out;
    for (auto a : all_shapes)
        for (auto b : all_shapes)
            if (contains(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<std::string> ShapeRelation::tokens() const {
    std::vector<std::string> out;
    for (auto [a, b] : pairs()) out.push_back(std::string(to_string(a)) + "->" + std::string(to_string(b)));
    std::sort(out.begin(), out.end());
    return out;
}

ShapeRelation ShapeRelation::parse(std::span<const std::string> tokens) {
    ShapeRelation r;
    for (const auto& tok : tokens) {
        const auto arrow = tok.find("->");
        if (arrow == std::string::npos) throw std::invalid_argument("bad transition token " + tok);
        r.insert(parse_shape(std::string_view(tok).substr(0, arrow)), parse_shape(std::string_view(tok).substr(arrow + 2)));
    }
    return r;
}

ShapeRelation compose_relations(const ShapeRelation& first, const ShapeRelation& second) {
    ShapeRelation r;
    for (auto [p, s] : first.pairs())
        for (auto t : all_shapes)
            if (second.contains(s, t)) r.insert(p, t);
    return r;
}

ShapeRelation admissible_transitions() {
    using enum Shape;
    return {{dpt, dpt}, {hl, hl}, {alt, alt}, {ax, ax}, {ang, ang}, {ang, ls}, {ls, ang}, {ls, ls}};
}

ShapeRelation decollineator_transitions() {
    using enum Shape;
    return admissible_transitions() - ShapeRelation{{hl, hl}, {ls, ls}};
}

ShapeRelation q_transitions() {
    using enum Shape;
    return {{hl, hl}, {ls, ls}, {alt, alt}, {ang, ls}, {ls, ang}};
}

ShapeRelation heavy_transitions() {
    using enum Shape;
    return {{ls, ang}, {ang, ls}, {ang, ang}, {alt, alt}};
}

BoundaryRelation compose_boundaries(const BoundaryRelation& first, const BoundaryRelation& second) {
    std::multimap<std::pair<Point, Point>, std::pair<Point, Point>> by_input;
    for (const auto& x : second.tuples()) by_input.emplace(std::pair{x[0], x[1]}, std::pair{x[2], x[3]});
    std::set<BoundaryTuple> out;
    for (const auto& x : first.tuples()) {
        auto [lo, hi] = by_input.equal_range({x[2], x[3]});
        for (auto it = lo; it != hi; ++it) out.insert({x[0], x[1], it->second.first, it->second.second});
    }
    return BoundaryRelation(std::move(out));
}

Transitions transitions_of(BoundaryRelation boundary, const Tetrahedron& t) {
    Transitions tr;
    for (const auto& x : boundary.tuples()) {
        tr.pairs.insert({PointPair(x[0], x[1]), PointPair(x[2], x[3])});
        tr.shapes.insert(t.shape(x[0], x[1]), t.shape(x[2], x[3]));
    }
    tr.boundary = std::move(boundary);
    return tr;
}

namespace {

// Boundary tuples compatible with Kirchhoff's law: the four values sum to 0.
std::vector<BoundaryTuple> kirchhoff_tuples(const Tetrahedron& t) {
    std::vector<BoundaryTuple> out;
    for (auto a : t.points())
        for (auto b : t.points())
            for (auto c : t.points())
                for (auto d : t.points())
                    if ((a.bits() ^ b.bits() ^ c.bits() ^ d.bits()) == 0) out.push_back({a, b, c, d});
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryTuple orbit_representative(const BoundaryTuple& x, const Tetrahedron& t) {
    BoundaryTuple best = x;
    for (const auto& perm : corner_permutations()) {
        BoundaryTuple y;
        for (std::size_t i = 0; i < 4; ++i) y[i] = t.permute(x[i], perm);
        best = std::min(best, y);
    }
    return best;
}

BoundaryRelation boundary_relation_counted(const Dipole& d, const Tetrahedron& t, std::uint64_t& queries) {
    require_two_two(d, "boundary_relation");
    const auto candidates = kirchhoff_tuples(t);
    std::map<BoundaryTuple, std::size_t> rep_slot;
    std::vector<BoundaryTuple> reps;
    std::vector<std::size_t> slot_of;
    for (const auto& x : candidates) {
        const auto r = orbit_representative(x, t);
        auto [it, fresh] = rep_slot.try_emplace(r, reps.size());
        if (fresh) reps.push_back(r);
        slot_of.push_back(it->second);
    }
    const std::array<int, 4> edges{d.input_edge(0), d.input_edge(1), d.output_edge(0), d.output_edge(1)};
    const auto realised = parallel_map<char>(reps.size(), [&](std::size_t i) -> char {
        std::array<std::pair<int, Point>, 4> fixed;
        for (std::size_t k = 0; k < 4; ++k) fixed[k] = {edges[k], reps[i][k]};
        return tetra_flow_exists(d.base(), t, fixed) ? 1 : 0;
    });
    queries = reps.size();
    std::set<BoundaryTuple> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (realised[slot_of[i]]) out.insert(candidates[i]);
    return BoundaryRelation(std::move(out));
}

}  // namespace

BoundaryRelation boundary_relation(const Dipole& d, const Tetrahedron& t) {
    std::uint64_t queries = 0;
    return boundary_relation_counted(d, t, queries);
}

Transitions transition_relation(const Dipole& d, const Tetrahedron& t) {
    std::uint64_t queries = 0;
    auto tr = transitions_of(boundary_relation_counted(d, t, queries), t);
    tr.queries = queries;
    return tr;
}

bool is_decollineator(const Transitions& tr, const Tetrahedron& t) {
    for (const auto& p : tr.pairs) {
        if (p.input.x == p.input.y || p.output.x == p.output.y) continue;
        if (is_collinear(t.shape(p.input.x, p.input.y)) && is_collinear(t.shape(p.output.x, p.output.y))) return false;
    }
    return true;
}

bool is_deangulator(const Transitions& tr) { return !tr.shapes.contains(Shape::ang, Shape::ang); }

bool is_heavy(const Transitions& tr, const Tetrahedron& t) {
    for (const auto& x : tr.boundary.tuples()) {
        int heavy = 0;
        for (auto p : x) heavy += t.weight(p) == 2;
        if (heavy < 2) return false;
    }
    return true;
}

bool admissibility_check(const Transitions& tr) { return tr.shapes.subset_of(admissible_transitions()); }

bool is_decollineator(const Dipole& d) { return is_decollineator(transition_relation(d)); }
bool is_deangulator(const Dipole& d) { return is_deangulator(transition_relation(d)); }
bool is_heavy(const Dipole& d) { return is_heavy(transition_relation(d)); }
bool admissibility_check(const Dipole& d) { return admissibility_check(transition_relation(d)); }

Graph decollineator_to_graph(const Dipole& d) { return close_with_edge(d); }

namespace {

std::set<std::pair<int, int>> cycle_edges(const Graph& g, const std::array<int, 5>& c) {
    std::set<std::pair<int, int>> out;
    if (std::set<int>(c.begin(), c.end()).size() != 5) throw std::invalid_argument("q_dipole_from: cycle repeats a vertex");
    for (std::size_t i = 0; i < 5; ++i) {
        const int u = c[i], v = c[(i + 1) % 5];
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("q_dipole_from: cycle vertex not in graph");
        out.emplace(std::min(u, v), std::max(u, v));
    }
    return out;
}

int unique_edge(const Graph& g, std::pair<int, int> uv) {
    int found = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (std::min(ed.a, ed.b) != uv.first || std::max(ed.a, ed.b) != uv.second) continue;
        if (found >= 0) throw std::invalid_argument("q_dipole_from: parallel edges on a cycle");
        found = e;
    }
    if (found < 0) throw std::invalid_argument("q_dipole_from: cycle uses a non-edge");
    return found;
}

}  // namespace

Dipole q_dipole_from(const Graph& g, const std::array<int, 5>& c1, const std::array<int, 5>& c2) {
    require_graph(g, "q_dipole_from");
    const auto e1 = cycle_edges(g, c1);
    const auto e2 = cycle_edges(g, c2);
    for (const auto& uv : e1) unique_edge(g, uv);
    for (const auto& uv : e2) unique_edge(g, uv);

    std::vector<std::pair<int, int>> shared;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
    std::set<int> common_vertices;
    for (int v : c1)
        if (std::find(c2.begin(), c2.end(), v) != c2.end()) common_vertices.insert(v);
    std::set<int> path_vertices;
    for (auto [u, v] : shared) path_vertices.insert({u, v});
    if (shared.size() != 2 || path_vertices.size() != 3 || common_vertices != path_vertices)
        throw std::invalid_argument("q_dipole_from: cycles must meet in exactly a path of length 2");

    auto far_edge = [&](const std::set<std::pair<int, int>>& es) {
        std::vector<std::pair<int, int>> out;
        for (auto uv : es)
            if (!path_vertices.contains(uv.first) && !path_vertices.contains(uv.second)) out.push_back(uv);
        if (out.size() != 1) throw std::logic_error("q_dipole_from: expected one edge away from the shared path");
        return unique_edge(g, out.front());
    };
    auto d = sever_same_edge(g, far_edge(e1), far_edge(e2));
    if (!transition_relation(d).shapes.subset_of(q_transitions()))
        throw std::invalid_argument("q_dipole_from: result has transitions outside Q; graph hypothesis fails");
    return d;
}

}  // namespace snark
