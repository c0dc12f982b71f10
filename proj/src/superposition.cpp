#include "snark/superposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "snark/graphs.hpp"
#include "snark/parallel.hpp"

namespace snark {

Dipole petersen_decollineator() {
    const std::array<int, 2> gone{0, 5};
    const auto m = remove_vertices(petersen(), gone);
    const std::array<std::string, 2> in{"x0:0", "x0:1"}, out{"x5:0", "x5:1"};
    return make_dipole(m, in, out);
}

Dipole petersen_q_dipole(const std::array<int, 5>& c1, const std::array<int, 5>& c2) {
    return q_dipole_from(petersen(), c1, c2);
}

Dipole basic_superedge() {
    const auto d = petersen_decollineator();
    return compose(d, compose(petersen_q_dipole(), d));
}

SuperpositionPlan canonical_plan(Graph base, Dipole superedge) {
    SuperpositionPlan plan;
    plan.edges.assign(static_cast<std::size_t>(base.edge_count()), SuperedgeAttachment{});
    plan.base = std::move(base);
    plan.library.push_back(std::move(superedge));
    return plan;
}

Superposition assemble_superposition(const SuperpositionPlan& plan) {
    const auto& g = plan.base;
    require_graph(g, "superposition base");
    if (static_cast<int>(plan.edges.size()) != g.edge_count())
        throw std::invalid_argument("superposition: one attachment per base edge required");
    auto bijective = [](const std::array<int, 2>& a) {
        return (a[0] == 0 && a[1] == 1) || (a[0] == 1 && a[1] == 0);
    };

    Superposition s;
    s.lift_count = 2 * g.vertex_count();
    int next_vertex = s.lift_count;
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& at = plan.edges[static_cast<std::size_t>(e)];
        if (at.superedge < 0 || at.superedge >= static_cast<int>(plan.library.size()))
            throw std::invalid_argument("superposition: unknown superedge");
        if (!bijective(at.input_lift) || !bijective(at.output_lift))
            throw std::invalid_argument("superposition: both dangling edges of a connector need distinct lifts");
        const auto& x = plan.library[static_cast<std::size_t>(at.superedge)];
        require_two_two(x, "superposition");
        const int shift = next_vertex;
        const int a = g.edge(e).a, b = g.edge(e).b;
        s.superedge_offset.push_back(shift);
        std::vector<int> map;
        for (int k = 0; k < x.base().edge_count(); ++k) {
            const auto& ed = x.base().edge(k);
            map.push_back(static_cast<int>(edges.size()));
            if (!ed.dangling()) {
                edges.push_back(Edge::inner(ed.a + shift, ed.b + shift));
                continue;
            }
            int lift = -1;
            for (int i = 0; i < 2; ++i) {
                if (x.input_edge(i) == k) lift = 2 * a + at.input_lift[static_cast<std::size_t>(i)];
                if (x.output_edge(i) == k) lift = 2 * b + at.output_lift[static_cast<std::size_t>(i)];
            }
            edges.push_back(Edge::inner(ed.a + shift, lift));
        }
        s.boundary_edges.push_back({map[static_cast<std::size_t>(x.input_edge(0))], map[static_cast<std::size_t>(x.input_edge(1))],
                                    map[static_cast<std::size_t>(x.output_edge(0))], map[static_cast<std::size_t>(x.output_edge(1))]});
        s.edge_map.push_back(std::move(map));
        next_vertex += x.vertex_count();
    }
    s.graph = Graph(next_vertex, std::move(edges));
    return s;
}

HeavinessCertificate certify_heaviness(const SuperpositionPlan& plan) {
    std::set<int> used;
    for (const auto& at : plan.edges) used.insert(at.superedge);
    const std::vector<int> ids(used.begin(), used.end());
    HeavinessCertificate cert;
    cert.base_vertices = plan.base.vertex_count();
    cert.base_edges = plan.base.edge_count();
    for (int id : ids) {
        if (id < 0 || id >= static_cast<int>(plan.library.size()))
            throw std::invalid_argument("certify_heaviness: unknown superedge");
        const auto tr = transition_relation(plan.library[static_cast<std::size_t>(id)]);
        cert.superedges.push_back({id, tr.shapes, tr.shapes.subset_of(heavy_transitions()), is_heavy(tr), tr.boundary.size()});
    }
    return cert;
}

Superposition heavy_superposition(const SuperpositionPlan& plan) {
    for (const auto& h : certify_heaviness(plan).superedges)
        if (!h.heavy) throw std::invalid_argument("heavy_superposition: superedge " + std::to_string(h.superedge) + " is not heavy");
    return assemble_superposition(plan);
}

PmiVerdict certify_pmi_at_least_5(const Superposition& s, const SuperpositionPlan& plan, const HeavinessCertificate& cert) {
    PmiVerdict v;
    auto refuse = [&](std::string why) {
        v.at_least_five = false;
        v.refusal = std::move(why);
        return v;
    };
    const int n = plan.base.vertex_count();
    const int m = plan.base.edge_count();
    if (cert.base_vertices != n || cert.base_edges != m) return refuse("certificate is for a different base graph");
    if (static_cast<int>(s.boundary_edges.size()) != m || s.lift_count != 2 * n)
        return refuse("superposition does not match the plan");

    // (0) every superedge in use is certified heavy
    for (const auto& at : plan.edges) {
        const auto it = std::find_if(cert.superedges.begin(), cert.superedges.end(),
                                     [&](const SuperedgeHeaviness& h) { return h.superedge == at.superedge; });
        if (it == cert.superedges.end()) return refuse("superedge " + std::to_string(at.superedge) + " not covered by the certificate");
        if (!it->heavy) return refuse("superedge " + std::to_string(at.superedge) + " is not heavy");
    }
    v.steps.push_back("every superedge is heavy: each T-flow puts midpoints on at least two of its four dangling edges");

    // (a) every line of T has exactly one midpoint
    const auto& t = Tetrahedron::canonical();
    for (const auto& line : t.lines()) {
        const auto mids = std::count_if(line.begin(), line.end(), [&](Point p) { return t.weight(p) == 2; });
        if (mids != 1) return refuse("a line of the tetrahedron does not have exactly one midpoint");
    }
    v.steps.push_back("every line of T has exactly one midpoint, so each lift has exactly one heavy edge");

    // (b) the lifts are independent and their edges are exactly the boundary edges
    std::vector<int> at_lift(static_cast<std::size_t>(s.lift_count), 0);
    std::set<int> boundary;
    for (const auto& be : s.boundary_edges)
        for (int e : be) boundary.insert(e);
    for (int e : boundary) {
        const auto& ed = s.graph.edge(e);
        const bool a_lift = ed.a < s.lift_count, b_lift = ed.b < s.lift_count;
        if (a_lift == b_lift) return refuse("boundary edge without exactly one lift end");
        ++at_lift[static_cast<std::size_t>(a_lift ? ed.a : ed.b)];
    }
    if (std::any_of(at_lift.begin(), at_lift.end(), [](int k) { return k != 3; }))
        return refuse("a lift is not incident with exactly three boundary edges");
    v.heavy_boundary_edges = s.lift_count;
    v.steps.push_back("the lifts are independent, so boundary edges carry exactly " + std::to_string(v.heavy_boundary_edges) +
                      " midpoints");

    // (c) counting
    v.average_per_superedge = Rational(v.heavy_boundary_edges, m);
    if (v.average_per_superedge >= 2) return refuse("average heavy count per superedge is not below 2");
    v.steps.push_back("average per superedge is " + to_string(v.average_per_superedge) + " < 2, contradicting heaviness; hence no T-flow and no cover by four perfect matchings");
    v.at_least_five = true;
    return v;
}

}  // namespace snark
