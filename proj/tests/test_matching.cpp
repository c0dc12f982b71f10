#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "snark/census.hpp"
#include "snark/graphs.hpp"
#include "snark/invariants.hpp"
#include "snark/matching.hpp"
#include "snark/tetra_flow.hpp"

using namespace snark;

namespace {

// Perfect matchings as edge subsets of size n/2 hitting every vertex; test-only oracle.
std::set<std::vector<int>> matchings_by_subsets(const Graph& g) {
    std::set<std::vector<int>> out;
    const int m = g.edge_count();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> es;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) es.push_back(e);
        if (static_cast<int>(es.size()) * 2 == g.vertex_count() && is_perfect_matching(g, es)) out.insert(es);
    }
    return out;
}

// Smallest cover size by trying all multisets of matchings; test-only oracle.
int pmi_by_multisets(const Graph& g, int cap) {
    const auto ms = enumerate_perfect_matchings(g);
    for (int k = 1; k <= cap; ++k) {
        std::vector<int> pick(k, 0);
        std::function<bool(int, int)> go = [&](int i, int from) {
            if (i == k) {
                Cover c;
                for (int p : pick) c.push_back(ms[p]);
                return is_cover(g, c);
            }
            for (int p = from; p < static_cast<int>(ms.size()); ++p) {
                pick[i] = p;
                if (go(i + 1, p)) return true;
            }
            return false;
        };
        if (go(0, 0)) return k;
    }
    return cap + 1;
}

}  // namespace

TEST_CASE("perfect matchings of small graphs") {
    CHECK(enumerate_perfect_matchings(petersen()).size() == 6);
    CHECK(enumerate_perfect_matchings(k4()).size() == 3);
    CHECK(enumerate_perfect_matchings(theta()).size() == 3);
    for (const auto& g : {petersen(), k4(), k33(), prism(), cube()}) {
        const auto ms = enumerate_perfect_matchings(g);
        const std::set<std::vector<int>> distinct(ms.begin(), ms.end());
        CHECK(distinct.size() == ms.size());
        CHECK(distinct == matchings_by_subsets(g));
    }
}

TEST_CASE("perfect matching index of named graphs") {
    CHECK(perfect_matching_index(k4()).value == 3);
    CHECK(perfect_matching_index(theta()).value == 3);
    const auto p4 = perfect_matching_index(petersen(), 4);
    CHECK_FALSE(p4.value);
    CHECK(p4.nodes > 0);
    const auto p5 = perfect_matching_index(petersen(), 5);
    REQUIRE(p5.value == 5);
    CHECK(p5.certificate.size() == 5);
    CHECK(is_cover(petersen(), p5.certificate));
    CHECK_THROWS(perfect_matching_index(petersen(), 2));
}

TEST_CASE("connected cubic graph counts") {
    // Known counts of connected cubic graphs on 4, 6, 8, 10 vertices.
    CHECK(connected_cubic_graphs(4).size() == 1);
    CHECK(connected_cubic_graphs(6).size() == 2);
    CHECK(connected_cubic_graphs(8).size() == 5);
    CHECK(connected_cubic_graphs(10).size() == 19);
    for (const auto& g : connected_cubic_graphs(8)) {
        CHECK(is_connected(g));
        CHECK(girth(g) >= 3);
    }
}

TEST_CASE("census: index 3 exactly on colourable graphs, brute-force agreement") {
    for (const auto& g : bridgeless_cubic_census(10)) {
        const auto r = perfect_matching_index(g, 5);
        REQUIRE(r.value);
        CHECK(*r.value >= 3);
        CHECK((*r.value == 3) == is_three_edge_colourable(g));
        CHECK(is_cover(g, r.certificate));
        CHECK(static_cast<int>(r.certificate.size()) == *r.value);
        CHECK(*r.value == pmi_by_multisets(g, 5));
    }
}

TEST_CASE("cover and flow translation") {
    const auto& t = Tetrahedron::canonical();
    const auto g = k4();
    const auto ms = enumerate_perfect_matchings(g);
    const Cover c{ms[0], ms[1], ms[2], ms[0]};
    const auto flow = cover_to_flow(g, c, t);
    CHECK(is_valid_tetra_flow(g, t, flow));
    CHECK(flow_to_cover(g, flow, t) == c);
    CHECK_THROWS(cover_to_flow(g, Cover{ms[0], ms[1], ms[2]}, t));
    CHECK_THROWS(cover_to_flow(g, Cover{ms[0], ms[0], ms[1], ms[1]}, t));

    // an edge in matchings 1 and 2 only gets c3 + c4
    const int e = ms[0][0];
    bool found = false;
    for (const auto& c2 : std::vector<Cover>{{ms[0], ms[0], ms[1], ms[2]}}) {
        const auto f = cover_to_flow(g, c2, t);
        CHECK(f[e] == t.corners()[2] + t.corners()[3]);
        found = true;
    }
    CHECK(found);
    TetraFlow bad(g.edge_count(), Point(1));
    CHECK_THROWS(flow_to_cover(g, bad, t));
}

TEST_CASE("census: four covers, T-flows and round trips") {
    const Tetrahedron other({Point(3), Point(5), Point(9), Point(8)});
    for (const auto& g : bridgeless_cubic_census(10)) {
        const auto r = perfect_matching_index(g, 5);
        const bool four = r.value && *r.value <= 4;
        for (const auto* t : {&Tetrahedron::canonical(), &other}) {
            const auto f = find_tetra_flow(g, *t);
            REQUIRE(four == f.flow.has_value());
            if (f.flow) {
                const auto c = flow_to_cover(g, *f.flow, *t);
                CHECK(cover_to_flow(g, c, *t) == *f.flow);
            }
        }
        if (!four) continue;
        // every ordered four-cover survives the round trip
        const auto ms = enumerate_perfect_matchings(g);
        for (const auto& a : ms)
            for (const auto& b : ms)
                for (const auto& c : ms)
                    for (const auto& d : ms) {
                        const Cover cov{a, b, c, d};
                        if (!is_cover(g, cov)) continue;
                        REQUIRE(flow_to_cover(g, cover_to_flow(g, cov), Tetrahedron::canonical()) == cov);
                    }
        // the correspondence is with ordered covers
        CHECK(count_ordered_four_covers(g) == count_tetra_flows(g));
    }
}
