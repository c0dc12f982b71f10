#include <functional>
#include <set>

#include "doctest.h"
#include "snark/census.hpp"
#include "snark/circular_flow.hpp"
#include "snark/graphs.hpp"
#include "snark/invariants.hpp"
#include "snark/superposition.hpp"

using namespace snark;

namespace {

// Independent oracle: pick values on the edges outside a BFS spanning tree,
// then Kirchhoff fixes the tree edges leaf by leaf; check their range.
bool oracle_flow(const Graph& g, int p, int q, bool modular) {
    const int n = g.vertex_count();
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1), order{0};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int e : g.incident(order[i])) {
            const int w = g.other_end(e, order[i]);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent_edge[static_cast<std::size_t>(w)] = e;
                order.push_back(w);
            }
        }
    std::vector<char> tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : parent_edge)
        if (e >= 0) tree[static_cast<std::size_t>(e)] = 1;
    std::vector<int> cotree;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!tree[static_cast<std::size_t>(e)]) cotree.push_back(e);
    std::vector<int> alphabet;
    for (int x = modular ? 1 : -(p - 1); x <= p - 1; ++x) {
        const int r = ((x % p) + p) % p;
        if (modular ? (r >= q && r <= p - q) : (std::abs(x) >= q && std::abs(x) <= p - q)) alphabet.push_back(x);
    }
    auto ok = [&](int x) {
        if (!modular) return std::abs(x) >= q && std::abs(x) <= p - q;
        const int r = ((x % p) + p) % p;
        return r >= q && r <= p - q;
    };
    std::vector<int> val(static_cast<std::size_t>(g.edge_count()), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == cotree.size()) {
            for (std::size_t i = order.size(); i-- > 1;) {
                const int v = order[i];
                const int pe = parent_edge[static_cast<std::size_t>(v)];
                int in = 0;
                for (int e : g.incident(v))
                    if (e != pe) in += g.edge(e).b == v ? val[static_cast<std::size_t>(e)] : -val[static_cast<std::size_t>(e)];
                // inflow through pe must cancel in
                const int x = g.edge(pe).b == v ? -in : in;
                if (!ok(x)) return false;
                val[static_cast<std::size_t>(pe)] = x;
            }
            return true;
        }
        for (int x : alphabet) {
            val[static_cast<std::size_t>(cotree[k])] = x;
            if (go(k + 1)) return true;
        }
        return false;
    };
    return go(0);
}

bool valid(const Graph& g, const PQFlow& f) { return verify_flow(g, to_rational(f), Rational(f.p, f.q), f.modular); }

std::vector<Graph> small_census() { return bridgeless_cubic_census(8); }

}  // namespace

TEST_CASE("alphabets") {
    const PQAlphabet a(7, 2, false);
    CHECK(a.size() == 8);
    CHECK(a.value(0) == -5);
    CHECK(a.value(7) == 5);
    CHECK(a.rule().negate(a.index(3)) == a.index(-3));
    const PQAlphabet m(7, 2, true);
    CHECK(m.size() == 4);
    CHECK(m.rule().negate(m.index(2)) == m.index(5));
    CHECK_THROWS(PQAlphabet(3, 2, false));
    CHECK_THROWS(m.index(1));
}

TEST_CASE("Petersen graph") {
    const auto g = petersen();
    const auto five = has_circular_pq_flow(g, 5, 1);
    REQUIRE(five);
    CHECK(valid(g, *five));
    CHECK(!has_circular_pq_flow(g, 9, 2));
    CHECK(!has_circular_pq_flow(g, 13, 3));
    CHECK(!has_circular_pq_flow(g, 14, 3));
    CHECK(!oracle_flow(g, 9, 2, false));
    CHECK(oracle_flow(g, 5, 1, false));

    const auto c = circular_flow_number(g, 3);
    CHECK(c.value == Rational(5));
    CHECK(valid(g, c.witness));
    const std::vector<Rational> below{Rational(2),     Rational(7, 3), Rational(5, 2), Rational(8, 3),
                                      Rational(3),     Rational(10, 3), Rational(7, 2), Rational(11, 3),
                                      Rational(4),     Rational(13, 3), Rational(9, 2), Rational(14, 3)};
    CHECK(c.refused == below);
}

TEST_CASE("theta and K4") {
    const auto t = theta();
    const auto three = has_circular_pq_flow(t, 3, 1);
    REQUIRE(three);
    CHECK(valid(t, *three));
    std::multiset<int> mags;
    for (int v : three->values) mags.insert(std::abs(v));
    CHECK(mags == std::multiset<int>{1, 1, 2});
    CHECK(!has_circular_pq_flow(t, 5, 2));
    CHECK(!has_circular_pq_flow(t, 8, 3));
    CHECK(circular_flow_number(t, 3).value == Rational(3));

    const auto k = k4();
    REQUIRE(has_circular_pq_flow(k, 4, 1));
    CHECK(!has_circular_pq_flow(k, 7, 2));
    CHECK(!has_circular_pq_flow(k, 11, 3));
    CHECK(circular_flow_number(k, 3).value == Rational(4));
    CHECK(circular_flow_number(k33(), 3).value == Rational(3));
    CHECK(circular_flow_number(prism(), 3).value == Rational(4));
}

TEST_CASE("preconditions") {
    const Graph with_bridge(6, {Edge::inner(0, 1), Edge::inner(0, 1), Edge::inner(1, 2), Edge::inner(0, 2), Edge::inner(3, 4),
                                Edge::inner(3, 4), Edge::inner(4, 5), Edge::inner(3, 5), Edge::inner(2, 5)});
    REQUIRE(has_bridge(with_bridge));
    CHECK_THROWS_AS(has_circular_pq_flow(with_bridge, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(circular_flow_number(with_bridge, 2), std::invalid_argument);
    CHECK_THROWS_AS(has_circular_pq_flow(k4(), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(circular_flow_number(k4(), 0), std::invalid_argument);
}

TEST_CASE("verify_flow rejects broken witnesses") {
    const auto g = petersen();
    const auto f = *has_circular_pq_flow(g, 5, 1);
    auto flipped = f;
    flipped.values[3] = -flipped.values[3];
    CHECK(!valid(g, flipped));
    auto wide = f;
    wide.values[0] = 5;
    CHECK(!valid(g, wide));
    CHECK(!verify_flow(g, std::vector<Rational>(3, Rational(1)), Rational(5), false));
    CHECK(valid(g, reduce_modulo(f)));
}

TEST_CASE("flow number candidates") {
    const auto c = flow_number_candidates(2, Rational(4));
    const std::vector<Rational> want{Rational(2), Rational(5, 2), Rational(3), Rational(7, 2), Rational(4)};
    CHECK(c == want);
}

TEST_CASE("census: search agrees with the cotree oracle") {
    const auto cands = flow_number_candidates(3, Rational(5));
    for (const auto& g : small_census()) {
        for (const auto& r : cands) {
            const int p = static_cast<int>(r.numerator()), q = static_cast<int>(r.denominator());
            const auto f = has_circular_pq_flow(g, p, q);
            CHECK(f.has_value() == oracle_flow(g, p, q, false));
            if (f) {
                CHECK(valid(g, *f));
                CHECK(valid(g, reduce_modulo(*f)));
            }
            const auto m = has_modular_pq_flow(g, p, q);
            CHECK(m.has_value() == oracle_flow(g, p, q, true));
            CHECK(m.has_value() == f.has_value());
            if (m) CHECK(valid(g, *m));
        }
    }
}

TEST_CASE("census up to 10 vertices: monotone and integer-modular agreement") {
    const auto cands = flow_number_candidates(3, Rational(5));
    for (const auto& g : bridgeless_cubic_census(10)) {
        bool seen = false;
        for (const auto& r : cands) {
            const int p = static_cast<int>(r.numerator()), q = static_cast<int>(r.denominator());
            const bool has = has_circular_pq_flow(g, p, q).has_value();
            CHECK((!seen || has));
            seen = seen || has;
            CHECK(has == has_modular_pq_flow(g, p, q).has_value());
        }
        CHECK(seen);
    }
}

TEST_CASE("scaling p and q together keeps the decision") {
    for (const auto& g : small_census())
        for (auto [p, q] : {std::pair{5, 2}, {3, 1}, {7, 2}, {4, 1}})
            CHECK(has_circular_pq_flow(g, 2 * p, 2 * q).has_value() == has_circular_pq_flow(g, p, q).has_value());
    CHECK(!has_circular_pq_flow(petersen(), 18, 4));
    CHECK(has_circular_pq_flow(petersen(), 10, 2));
}

TEST_CASE("flow relations compose") {
    const auto dec = petersen_decollineator();
    const auto qd = petersen_q_dipole();
    const auto pass = pass_through_dipole();
    for (auto [p, q, modular] : {std::tuple{5, 1, false}, {9, 2, true}, {7, 2, false}}) {
        CHECK(compose_flow_relations(flow_relation(dec, p, q, modular), flow_relation(qd, p, q, modular)) ==
              flow_relation(compose(dec, qd), p, q, modular));
        CHECK(compose_flow_relations(flow_relation(pass, p, q, modular), flow_relation(dec, p, q, modular)) ==
              flow_relation(compose(pass, dec), p, q, modular));
    }
}

TEST_CASE("totals through the Petersen dipoles") {
    const auto d = modular_totals_through(petersen_decollineator(), 9, 2);
    const std::set<Rational> d_want{Rational(-1, 2), Rational(0), Rational(1, 2)};
    CHECK(d == d_want);
    for (const auto& x : d) CHECK((x > Rational(-1) && x < Rational(1)));

    const auto q = modular_totals_through(petersen_q_dipole(), 9, 2);
    CHECK(!q.contains(Rational(0)));
    const std::set<Rational> q_want{Rational(-2), Rational(-3, 2), Rational(-1), Rational(-1, 2),
                                    Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    CHECK(q == q_want);

    const auto plan = canonical_plan(theta());
    const auto rel = superedge_flow_relations(plan, 9, 2, true);
    const std::set<Rational> halves{Rational(-1, 2), Rational(1, 2)};
    CHECK(totals_of(rel[0]) == halves);
    // Direct sweep over the 26-vertex superedge.
    CHECK(flow_relation(basic_superedge(), 9, 2, true) == rel[0]);
}

TEST_CASE("Kirchhoff closure: what enters leaves") {
    for (const auto& d : {petersen_decollineator(), petersen_q_dipole()})
        for (auto [p, q] : {std::pair{9, 2}, {14, 3}, {5, 1}}) {
            const auto r = flow_relation(d, p, q, true);
            for (const auto& t : r.tuples) CHECK((t[0] + t[1] + t[2] + t[3]) % p == 0);
            const auto z = flow_relation(d, p, q, false);
            for (const auto& t : z.tuples) CHECK(t[0] + t[1] + t[2] + t[3] == 0);
        }
}

TEST_CASE("lower bound on the superpositions") {
    for (const auto& base : {theta(), k4()}) {
        const auto plan = canonical_plan(base);
        const auto s = assemble_superposition(plan);
        const auto v = refute_9_2_flow_on_superposition(s, plan);
        CHECK(v.refuted);
        CHECK(v.exhaustive_refuted);
        CHECK(v.blocking_vertex == 0);
        CHECK(!v.assumed_lemma.empty());
        CHECK(v.refusal.empty());
    }
    const auto plan = canonical_plan(theta(), pass_through_dipole());
    const auto s = assemble_superposition(plan);
    const auto v = refute_9_2_flow_on_superposition(s, plan);
    CHECK(!v.refuted);
    CHECK(!v.refusal.empty());
}

TEST_CASE("superedge templates") {
    const auto ts = derive_superedge_templates();
    REQUIRE(ts);
    CHECK(ts->max_abs == 11);
    const auto se = basic_superedge();
    for (const auto& t : ts->templates) {
        for (int v : t.internal) CHECK((std::abs(v) >= 3 && std::abs(v) <= 11));
        CHECK(static_cast<int>(t.internal.size()) == se.base().edge_count());
        std::vector<Rational> q;
        for (int v : t.internal) q.emplace_back(v, 3);
        CHECK(verify_flow(se.base(), q, Rational(14, 3), false));
        CHECK(t.internal[static_cast<std::size_t>(se.input_edge(0))] == t.boundary[0]);
        CHECK(t.internal[static_cast<std::size_t>(se.output_edge(1))] == t.boundary[3]);
    }
    for (std::size_t c = 0; c < 4; ++c) {
        int sum = 0;
        for (const auto& t : ts->templates) sum += t.boundary[c];
        CHECK(sum == 0);
    }
    CHECK(derive_superedge_templates()->templates[1].boundary == ts->templates[1].boundary);
}

TEST_CASE("14/3-flow on the theta superposition") {
    const auto plan = canonical_plan(theta());
    const auto s = assemble_superposition(plan);
    const std::vector<int> colouring{0, 1, 2};
    const auto c = construct_14_3_flow(s, plan, colouring);
    REQUIRE(c.flow);
    CHECK(c.method == "templates");
    const auto q = to_rational(*c.flow);
    CHECK(verify_flow(s.graph, q, Rational(14, 3), false));
    for (const auto& v : q) CHECK((abs(v) >= Rational(1) && abs(v) <= Rational(11, 3)));
    CHECK_THROWS_AS(construct_14_3_flow(s, plan, std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("no 14/3-flow on the K4 superposition") {
    const auto plan = canonical_plan(k4());
    const auto s = assemble_superposition(plan);
    const auto col = three_edge_colouring(k4());
    REQUIRE(col);
    const auto c = construct_14_3_flow(s, plan, *col);
    CHECK(!c.flow);
    CHECK(c.method.empty());
    CHECK(c.steps.size() >= 3);
}

TEST_CASE("Petersen base has no colouring to supply") {
    CHECK(!three_edge_colouring(petersen()));
    const auto plan = canonical_plan(petersen());
    const auto s = assemble_superposition(plan);
    CHECK_THROWS_AS(construct_14_3_flow(s, plan, std::vector<int>(15, 0)), std::invalid_argument);
}
