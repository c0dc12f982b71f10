#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "snark/graphs.hpp"
#include "snark/invariants.hpp"
#include "snark/isomorphism.hpp"
#include "snark/multipole.hpp"
#include "snark/random_graphs.hpp"

using namespace snark;

namespace {

Multipole claw(const std::string& prefix) {
    return Multipole(1, {Edge::free(0, prefix + "0"), Edge::free(0, prefix + "1"), Edge::free(0, prefix + "2")});
}

Multipole disjoint_union(const Multipole& a, const Multipole& b) {
    std::vector<Edge> edges = a.edges();
    for (auto ed : b.edges()) {
        ed.a += a.vertex_count();
        if (ed.b >= 0) ed.b += a.vertex_count();
        edges.push_back(ed);
    }
    return Multipole(a.vertex_count() + b.vertex_count(), std::move(edges));
}

// Shortest cycle by walking all simple paths; test-only oracle.
int girth_by_cycle_walk(const Graph& g) {
    int best = 1 << 30;
    std::vector<char> on_path(g.vertex_count(), 0);
    std::function<void(int, int, int, int)> walk = [&](int start, int v, int via, int len) {
        if (len >= best) return;
        for (int e : g.incident(v)) {
            if (e == via) continue;
            const int w = g.other_end(e, v);
            if (w == start && len + 1 >= 2) best = std::min(best, len + 1);
            else if (!on_path[w] && w > start) {
                on_path[w] = 1;
                walk(start, w, e, len + 1);
                on_path[w] = 0;
            }
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        on_path[s] = 1;
        walk(s, s, -1, 0);
        on_path[s] = 0;
    }
    return best;
}

// Smallest cycle-separating cut by enumerating vertex bipartitions; test-only oracle.
int cyclic_connectivity_by_bipartition(const Graph& g) {
    const int n = g.vertex_count();
    auto side_has_cycle = [&](unsigned mask) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (const auto& ed : g.edges()) {
            if (!(mask >> ed.a & 1) || !(mask >> ed.b & 1)) continue;
            const int ra = find(ed.a), rb = find(ed.b);
            if (ra == rb) return true;
            parent[ra] = rb;
        }
        return false;
    };
    int best = 1 << 30;
    const unsigned all = (1u << n) - 1;
    for (unsigned s = 1; s < all; ++s) {
        if (!side_has_cycle(s) || !side_has_cycle(all ^ s)) continue;
        int cut = 0;
        for (const auto& ed : g.edges())
            if ((s >> ed.a & 1) != (s >> ed.b & 1)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

bool colourable_by_brute_force(const Graph& g) {
    std::vector<int> colour(g.edge_count(), -1);
    std::function<bool(int)> go = [&](int e) {
        if (e == g.edge_count()) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int v : {g.edge(e).a, g.edge(e).b})
                for (int f : g.incident(v))
                    if (f != e && colour[f] == c) ok = false;
            if (!ok) continue;
            colour[e] = c;
            if (go(e + 1)) return true;
            colour[e] = -1;
        }
        return false;
    };
    return go(0);
}

}  // namespace

TEST_CASE("construction rejects loops, free edges and non-cubic vertices") {
    CHECK_THROWS_AS(Multipole(1, {Edge::inner(0, 0), Edge::free(0, "a")}), std::invalid_argument);
    CHECK_THROWS_AS(Multipole(1, {Edge{-1, -1, "x"}, Edge::free(0, "a"), Edge::free(0, "b"), Edge::free(0, "c")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Multipole(2, {Edge::inner(0, 1), Edge::inner(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(Multipole(1, {Edge::free(0, "a"), Edge::free(0, "a"), Edge::free(0, "b")}), std::invalid_argument);
}

TEST_CASE("edge-end bookkeeping") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto d = random_two_two_pole(rng, 12);
        const auto& m = d.base();
        CHECK(2 * m.edge_count() == 3 * m.vertex_count() + m.dangling_count());
    }
}

TEST_CASE("junction of three claws pairwise gives theta") {
    auto m = disjoint_union(claw("a"), claw("b"));
    m = junction(m, "a0", "b0");
    CHECK(m.dangling_count() == 4);
    m = junction(m, "a1", "b1");
    m = junction(m, "a2", "b2");
    CHECK(m.is_graph());
    CHECK(m.vertex_count() == 2);
    CHECK(isomorphic(m, theta()));
}

TEST_CASE("junction errors") {
    const auto m = disjoint_union(claw("a"), claw("b"));
    CHECK_THROWS(junction(m, "a0", "a0"));
    CHECK_THROWS(junction(m, "a0", "zz"));
    CHECK_THROWS(junction(m, "a0", "a1"));  // both on the same vertex
}

TEST_CASE("sever and rejoin Petersen") {
    const auto p = petersen();
    const auto d = sever_same_edge(p, 3, 12);
    CHECK(d.vertex_count() == 10);
    CHECK(d.base().dangling_count() == 4);
    auto back = junction(junction(d.base(), "in:0", "in:1"), "out:0", "out:1");
    CHECK(isomorphic(back, p));
    // rejoining across connectors gives some other cubic graph on 10 vertices
    auto other = junction(junction(d.base(), "in:0", "out:0"), "in:1", "out:1");
    CHECK(other.vertex_count() == 10);
}

TEST_CASE("sever theta at one edge") {
    const std::array<EdgeCut, 1> cut{EdgeCut{0, Side::input, Side::output}};
    const auto d = sever(theta(), cut);
    CHECK(d.arity() == 1);
    CHECK(d.vertex_count() == 2);
    CHECK_THROWS(sever(theta(), std::array<EdgeCut, 1>{EdgeCut{7, Side::input, Side::output}}));
}

TEST_CASE("remove vertices") {
    const auto m = remove_vertices(petersen(), std::array<int, 2>{0, 5});
    CHECK(m.vertex_count() == 8);
    CHECK(m.dangling_count() == 4);
    const auto k = remove_vertices(k4(), std::array<int, 1>{0});
    CHECK(k.vertex_count() == 3);
    CHECK(k.dangling_count() == 3);
    CHECK(remove_vertices(k4(), std::span<const int>{}) == k4());
}

TEST_CASE("composition of dipoles") {
    Rng rng(11);
    const auto a = random_two_two_pole(rng, 8);
    const auto b = random_two_two_pole(rng, 8);
    CHECK(compose(a, b).vertex_count() == a.vertex_count() + b.vertex_count());
    const std::array<EdgeCut, 1> cut{EdgeCut{0, Side::input, Side::output}};
    CHECK_THROWS(compose(a, sever(theta(), cut)));
}

TEST_CASE("junction-sever identity on a random corpus") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 * (1 + static_cast<int>(uniform_below(rng, 6)));
        const auto g = random_cubic_multigraph(n, rng);
        const int e = static_cast<int>(uniform_below(rng, g.edge_count()));
        int f = static_cast<int>(uniform_below(rng, g.edge_count() - 1));
        if (f >= e) ++f;
        const auto d = sever_same_edge(g, e, f);
        const auto back = junction(junction(d.base(), "in:0", "in:1"), "out:0", "out:1");
        REQUIRE(isomorphic(back, g));
    }
}

TEST_CASE("composition is associative up to isomorphism") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_two_two_pole(rng, 8);
        const auto b = random_two_two_pole(rng, 8);
        const auto c = random_two_two_pole(rng, 8);
        REQUIRE(isomorphic(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
}

TEST_CASE("dipole isomorphism respects connector order") {
    const auto p = petersen();
    const auto d = sever_same_edge(p, 3, 12);
    const auto swapped = Dipole(d.base(), d.output(), d.input());
    CHECK(isomorphic(d, d));
    // Petersen is edge-transitive enough that reversing gives an isomorphic dipole
    CHECK(isomorphic(d, swapped) == isomorphic(swapped, d));
}

TEST_CASE("builders") {
    CHECK(petersen().vertex_count() == 10);
    CHECK(petersen().edge_count() == 15);
    CHECK(theta().vertex_count() == 2);
    CHECK(theta().edge_count() == 3);
    CHECK(k4().edge_count() == 6);
    CHECK(k33().edge_count() == 9);
    CHECK(prism().edge_count() == 9);
    CHECK(!builtin_graph("nope"));
}

TEST_CASE("girth") {
    CHECK(girth(k4()) == 3);
    CHECK(girth(theta()) == 2);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(cube()) == 4);
    CHECK(girth(k33()) == 4);
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto g = random_cubic_multigraph(2 * (1 + static_cast<int>(uniform_below(rng, 6))), rng);
        REQUIRE(girth(g) == girth_by_cycle_walk(g));
    }
}

TEST_CASE("three-edge-colourability") {
    CHECK(is_three_edge_colourable(k4()));
    CHECK(is_three_edge_colourable(theta()));
    CHECK(is_three_edge_colourable(prism()));
    CHECK_FALSE(is_three_edge_colourable(petersen()));
    const auto g = k33();
    const auto c = three_edge_colouring(g);
    REQUIRE(c);
    for (int v = 0; v < 6; ++v) {
        const auto& inc = g.incident(v);
        CHECK((*c)[inc[0]] != (*c)[inc[1]]);
        CHECK((*c)[inc[1]] != (*c)[inc[2]]);
        CHECK((*c)[inc[0]] != (*c)[inc[2]]);
    }
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_cubic_multigraph(2 * (1 + static_cast<int>(uniform_below(rng, 5))), rng);
        REQUIRE(is_three_edge_colourable(g) == colourable_by_brute_force(g));
    }
}

TEST_CASE("cyclic connectivity") {
    CHECK(cyclic_connectivity_at_least(petersen(), 4));
    CHECK(cyclic_connectivity_at_least(petersen(), 5));
    CHECK_FALSE(cyclic_connectivity_at_least(petersen(), 6));
    CHECK_FALSE(cyclic_connectivity_at_least(prism(), 4));
    CHECK(cyclic_connectivity_at_least(prism(), 3));
    CHECK(cyclic_connectivity_at_least(k4(), 100));
    CHECK(cyclic_connectivity_at_least(theta(), 100));
    Rng rng(8);
    for (int i = 0; i < 150; ++i) {
        const auto g = random_cubic_multigraph(2 * (2 + static_cast<int>(uniform_below(rng, 5))), rng);
        const int oracle = cyclic_connectivity_by_bipartition(g);
        for (int k = 1; k <= 6; ++k) REQUIRE(cyclic_connectivity_at_least(g, k) == (oracle >= k));
    }
}

TEST_CASE("bridges") {
    CHECK_FALSE(has_bridge(petersen()));
    CHECK_FALSE(has_bridge(theta()));
    // two K4-minus-an-edge blocks joined through a bridge
    std::vector<Edge> edges{Edge::inner(0, 1), Edge::inner(0, 2), Edge::inner(1, 2), Edge::inner(1, 3), Edge::inner(2, 3),
                            Edge::inner(0, 4), Edge::inner(3, 4),
                            Edge::inner(5, 6), Edge::inner(5, 7), Edge::inner(6, 7), Edge::inner(6, 8), Edge::inner(7, 8),
                            Edge::inner(5, 9), Edge::inner(8, 9), Edge::inner(4, 9)};
    CHECK(has_bridge(Graph(10, edges)));
}
