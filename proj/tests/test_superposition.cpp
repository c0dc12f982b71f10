#include <chrono>

#include "doctest.h"
#include "snark/graphs.hpp"
#include "snark/invariants.hpp"
#include "snark/isomorphism.hpp"
#include "snark/superposition.hpp"
#include "snark/tetra_flow.hpp"

using namespace snark;

TEST_CASE("lines of T each have one midpoint") {
    const auto& t = Tetrahedron::canonical();
    for (const auto& line : t.lines()) {
        int mids = 0;
        for (auto p : line) mids += t.weight(p) == 2;
        CHECK(mids == 1);
    }
}

TEST_CASE("superposition of theta") {
    const auto plan = canonical_plan(theta());
    const auto s = heavy_superposition(plan);
    const auto& g = s.graph;
    CHECK(g.vertex_count() == 82);
    CHECK(g.edge_count() == 123);
    CHECK(g.is_graph());
    CHECK(girth(g) == 5);
    CHECK(cyclic_connectivity_at_least(g, 4));
    CHECK(s.boundary_edges.size() == 3);
    // edges per superedge: 41 each, all distinct images
    std::set<int> images;
    for (const auto& m : s.edge_map) images.insert(m.begin(), m.end());
    CHECK(images.size() == 123);

    const auto cert = certify_heaviness(plan);
    REQUIRE(cert.superedges.size() == 1);
    CHECK(cert.superedges[0].heavy);
    CHECK(cert.superedges[0].within_heavy_transitions);
    const auto v = certify_pmi_at_least_5(s, plan, cert);
    CHECK(v.at_least_five);
    CHECK(v.heavy_boundary_edges == 4);
    CHECK(v.average_per_superedge == Rational(4, 3));
}

TEST_CASE("superposition of K4") {
    const auto plan = canonical_plan(k4());
    const auto s = heavy_superposition(plan);
    CHECK(s.graph.vertex_count() == 164);
    CHECK(girth(s.graph) == 5);
    const auto v = certify_pmi_at_least_5(s, plan, certify_heaviness(plan));
    CHECK(v.at_least_five);
    CHECK(v.average_per_superedge == Rational(4, 3));
}

TEST_CASE("attachment choices") {
    auto plan = canonical_plan(theta());
    plan.edges[1].input_lift = {1, 0};
    plan.edges[2].output_lift = {1, 0};
    const auto s = heavy_superposition(plan);
    CHECK(s.graph.vertex_count() == 82);
    CHECK(certify_pmi_at_least_5(s, plan, certify_heaviness(plan)).at_least_five);
    plan.edges[0].input_lift = {0, 0};
    CHECK_THROWS(assemble_superposition(plan));
}

TEST_CASE("a pass-through superedge is refused") {
    auto plan = canonical_plan(theta());
    plan.library.push_back(pass_through_dipole());
    plan.edges[1].superedge = 1;
    CHECK_THROWS(heavy_superposition(plan));
    const auto s = assemble_superposition(plan);
    CHECK(s.graph.vertex_count() == 2 * 2 + 26 * 2 + 2);
    const auto v = certify_pmi_at_least_5(s, plan, certify_heaviness(plan));
    CHECK_FALSE(v.at_least_five);
    CHECK_FALSE(v.refusal.empty());
    // a certificate that skips a superedge is refused too
    auto cert = certify_heaviness(canonical_plan(theta()));
    CHECK_FALSE(certify_pmi_at_least_5(s, plan, cert).at_least_five);
}

TEST_CASE("closing the superedge gives a graph without a four-cover") {
    const auto g = decollineator_to_graph(basic_superedge());
    CHECK(g.vertex_count() == 28);
    CHECK(is_decollineator(basic_superedge()));
    CHECK_FALSE(find_tetra_flow(g).flow);
}

TEST_CASE("the superpositions are not 3-edge-colourable") {
    CHECK_FALSE(is_three_edge_colourable(heavy_superposition(canonical_plan(theta())).graph));
    CHECK_FALSE(is_three_edge_colourable(heavy_superposition(canonical_plan(k4())).graph));
}
