#include <set>

#include "doctest.h"
#include "snark/edge_search.hpp"
#include "snark/frontier.hpp"
#include "snark/graphs.hpp"
#include "snark/random_graphs.hpp"
#include "snark/superposition.hpp"

using namespace snark;

namespace {

VertexRule colours() {
    return VertexRule(3, [](int x, int y, int z) { return x != y && y != z && x != z; });
}

// Integer flows with values ±1, ±2 (indices 0..3 are -2, -1, 1, 2).
VertexRule small_flows() {
    const int val[4] = {-2, -1, 1, 2};
    return VertexRule(4, [val](int x, int y, int z) { return val[x] + val[y] + val[z] == 0; }, {3, 2, 1, 0});
}

std::vector<std::vector<int>> enumerated(const Multipole& m, const VertexRule& rule) {
    std::set<std::vector<int>> seen;
    EdgeSearch es(m, rule);
    es.enumerate([&](const std::vector<int>& v) {
        std::vector<int> t;
        for (int e : m.dangling_edges()) t.push_back(v[static_cast<std::size_t>(e)]);
        seen.insert(t);
        return true;
    });
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("frontier order covers every vertex once") {
    const auto g = petersen();
    auto order = frontier_order(g);
    std::sort(order.begin(), order.end());
    for (int v = 0; v < 10; ++v) CHECK(order[static_cast<std::size_t>(v)] == v);
    CHECK(frontier_width(g, frontier_order(g)) <= 7);
}

TEST_CASE("graphs: one empty boundary tuple iff an assignment exists") {
    CHECK(boundary_assignments(k4(), colours()).boundary == std::vector<std::vector<int>>{{}});
    CHECK(boundary_assignments(petersen(), colours()).boundary.empty());
    CHECK(assignment_exists(theta(), small_flows()));
}

TEST_CASE("boundary tuples agree with full enumeration") {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = random_two_two_pole(rng, 10);
        for (const auto& rule : {colours(), small_flows()}) {
            CHECK(boundary_assignments(d.base(), rule).boundary == enumerated(d.base(), rule));
        }
    }
    const auto dec = petersen_decollineator();
    CHECK(boundary_assignments(dec.base(), small_flows()).boundary == enumerated(dec.base(), small_flows()));
}

TEST_CASE("restrictions and the state limit") {
    const auto dec = petersen_decollineator();
    const std::pair<int, Mask> only_first{dec.input_edge(0), Mask{1}};
    const auto r = boundary_assignments(dec.base(), colours(), std::span(&only_first, 1));
    const auto& dang = dec.base().dangling_edges();
    const auto pos = static_cast<std::size_t>(std::find(dang.begin(), dang.end(), dec.input_edge(0)) - dang.begin());
    REQUIRE(!r.boundary.empty());
    for (const auto& t : r.boundary) CHECK(t[pos] == 0);
    CHECK_THROWS_AS(boundary_assignments(dec.base(), small_flows(), {}, 3), std::length_error);
}
