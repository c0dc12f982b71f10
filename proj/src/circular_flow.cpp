#include "snark/circular_flow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "snark/frontier.hpp"
#include "snark/invariants.hpp"
#include "snark/parallel.hpp"
#include "snark/table_csp.hpp"

namespace snark {

namespace {

constexpr std::uint64_t search_budget = 2'000'000;

std::vector<int> alphabet_values(int p, int q, bool modular) {
    if (q < 1 || p < 2 * q) throw std::invalid_argument("(p,q)-flow needs q >= 1 and p >= 2q");
    std::vector<int> v;
    if (!modular)
        for (int x = -(p - q); x <= -q; ++x) v.push_back(x);
    for (int x = q; x <= p - q; ++x) v.push_back(x);
    if (static_cast<int>(v.size()) > max_domain_size) throw std::invalid_argument("(p,q) alphabet too large");
    return v;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }

/// x reduced into [0, r).
Rational mod_rational(const Rational& x, const Rational& r) {
    const Rational k = x / r;
    return x - r * floor_div(k.numerator(), k.denominator());
}

int negate_value(int x, int p, bool modular) { return modular ? (p - x) % p : -x; }

Mask upper_half(const PQAlphabet& a) {
    Mask m = 0;
    for (int i = 0; i < a.size(); ++i)
        if (i >= a.rule().negate(i)) m |= Mask{1} << i;
    return m;
}

bool uses_basic(const Dipole& d) {
    static const Dipole basic = basic_superedge();
    return d == basic;
}

/// Relation of d, through its three Petersen parts when d is the basic superedge.
FlowRelation relation_of(const Dipole& d, int p, int q, bool modular) {
    if (!uses_basic(d)) return flow_relation(d, p, q, modular);
    const auto dec = flow_relation(petersen_decollineator(), p, q, modular);
    const auto qd = flow_relation(petersen_q_dipole(), p, q, modular);
    return compose_flow_relations(dec, compose_flow_relations(qd, dec));
}

std::string list_totals(const std::set<Rational>& t) {
    std::string s = "{";
    for (const auto& x : t) s += (s.size() > 1 ? ", " : "") + to_string(x);
    return s + "}";
}

/// (base edge, connector coordinate) of the three superedge ends at each lift.
std::vector<std::array<std::pair<int, int>, 3>> lift_scopes(const Superposition& s) {
    std::vector<std::vector<std::pair<int, int>>> at(static_cast<std::size_t>(s.lift_count));
    for (std::size_t e = 0; e < s.boundary_edges.size(); ++e)
        for (int c = 0; c < 4; ++c) {
            const int lift = s.graph.edge(s.boundary_edges[e][static_cast<std::size_t>(c)]).b;
            if (lift < 0 || lift >= s.lift_count) throw std::invalid_argument("superposition: boundary edge misses the lifts");
            at[static_cast<std::size_t>(lift)].emplace_back(static_cast<int>(e), c);
        }
    std::vector<std::array<std::pair<int, int>, 3>> out;
    for (const auto& v : at) {
        if (v.size() != 3) throw std::invalid_argument("superposition: lift without three superedge ends");
        out.push_back({v[0], v[1], v[2]});
    }
    return out;
}

std::vector<TableCsp::Tuple> as_tuples(const FlowRelation& r) {
    std::vector<TableCsp::Tuple> out;
    out.reserve(r.tuples.size());
    for (const auto& t : r.tuples) out.emplace_back(t.begin(), t.end());
    return out;
}

/// Superposition CSP: one variable per base edge over its superedge's relation,
/// one constraint per lift on the three values flowing into it.
TableCsp superposition_csp(const Superposition& s, const SuperpositionPlan& plan, const std::vector<FlowRelation>& rels) {
    TableCsp csp;
    for (const auto& at : plan.edges) csp.add_variable(as_tuples(rels.at(static_cast<std::size_t>(at.superedge))));
    const int p = rels.empty() ? 1 : rels.front().p;
    const bool modular = !rels.empty() && rels.front().modular;
    for (const auto& scope : lift_scopes(s)) {
        if (modular)
            csp.add_constraint(scope, [p](int x, int y, int z) { return (x + y + z) % p == 0; });
        else
            csp.add_constraint(scope, [](int x, int y, int z) { return x + y + z == 0; });
    }
    return csp;
}

std::string all_totals(const std::vector<FlowRelation>& rels) {
    std::set<Rational> h;
    for (const auto& r : rels) {
        const auto t = totals_of(r);
        h.insert(t.begin(), t.end());
    }
    return list_totals(h);
}

/// Summed over both lifts of a base vertex, the flow into its superedges
/// vanishes: inputs there carry the superedge total h, outputs carry -h. Finds
/// totals (on the integer scale of the relations) satisfying this everywhere.
TableCsp::Result balanced_totals(const SuperpositionPlan& plan, const std::vector<FlowRelation>& rels) {
    const auto& g = plan.base;
    TableCsp csp;
    int p = 0;
    bool modular = false;
    for (const auto& at : plan.edges) {
        const auto& rel = rels.at(static_cast<std::size_t>(at.superedge));
        p = rel.p;
        modular = rel.modular;
        std::set<int> h;
        for (const auto& t : rel.tuples) h.insert(modular ? ((-(t[0] + t[1])) % p + p) % p : -(t[0] + t[1]));
        std::vector<TableCsp::Tuple> opts;
        for (int x : h) opts.push_back({x});
        csp.add_variable(std::move(opts));
    }
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto& inc = g.incident(x);
        std::array<int, 3> sign{};
        std::array<std::pair<int, int>, 3> scope{};
        for (std::size_t k = 0; k < 3; ++k) {
            sign[k] = g.edge(inc[k]).a == x ? 1 : -1;
            scope[k] = {inc[k], 0};
        }
        csp.add_constraint(scope, [sign, p, modular](int a, int b, int c) {
            const int t = sign[0] * a + sign[1] * b + sign[2] * c;
            return modular ? t % p == 0 : t == 0;
        });
    }
    return csp.solve();
}

void check_plan(const Superposition& s, const SuperpositionPlan& plan) {
    if (static_cast<int>(plan.edges.size()) != plan.base.edge_count() || s.boundary_edges.size() != plan.edges.size())
        throw std::invalid_argument("superposition does not match its plan");
}

}  // namespace

PQAlphabet::PQAlphabet(int p, int q, bool modular)
    : p_(p), q_(q), modular_(modular), values_(alphabet_values(p, q, modular)),
      rule_(static_cast<int>(values_.size()),
            [&](int x, int y, int z) {
                const int s = values_[static_cast<std::size_t>(x)] + values_[static_cast<std::size_t>(y)] +
                              values_[static_cast<std::size_t>(z)];
                return modular ? s % p == 0 : s == 0;
            },
            [&] {
                // Both alphabets are symmetric under negation and sorted.
                std::vector<int> neg(values_.size());
                for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = static_cast<int>(neg.size() - 1 - i);
                return neg;
            }()) {}

int PQAlphabet::index(int value) const {
    const auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end()) throw std::invalid_argument("value " + std::to_string(value) + " outside the (p,q) alphabet");
    return static_cast<int>(it - values_.begin());
}

PQDecision decide_pq_flow(const Graph& g, int p, int q, bool modular) {
    require_graph(g, "circular flow");
    const PQAlphabet alpha(p, q, modular);
    if (has_bridge(g)) throw std::invalid_argument("graph has a bridge: no nowhere-zero flow");
    PQDecision d;
    auto witness = [&](const std::vector<int>& idx) {
        PQFlow f{p, q, modular, {}};
        for (int i : idx) f.values.push_back(alpha.value(i));
        return f;
    };
    if (g.edge_count() == 0) {
        d.flow = PQFlow{p, q, modular, {}};
        return d;
    }
    // Negating a flow gives a flow, so edge 0 may take the upper half.
    const std::pair<int, Mask> first_edge{0, upper_half(alpha)};
    {
        EdgeSearch es(g, alpha.rule());
        es.set_node_limit(search_budget);
        es.restrict(first_edge.first, first_edge.second);
        const auto found = es.first();
        d.nodes = es.stats().nodes;
        if (found) {
            d.flow = witness(*found);
            return d;
        }
        if (!es.limit_reached()) return d;
    }
    d.swept = true;
    if (!assignment_exists(g, alpha.rule(), std::span(&first_edge, 1))) return d;
    EdgeSearch es(g, alpha.rule());
    es.restrict(first_edge.first, first_edge.second);
    const auto found = es.first();
    d.nodes += es.stats().nodes;
    if (!found) throw std::logic_error("frontier sweep and edge search disagree");
    d.flow = witness(*found);
    return d;
}

std::optional<PQFlow> has_circular_pq_flow(const Graph& g, int p, int q) { return decide_pq_flow(g, p, q, false).flow; }

std::optional<PQFlow> has_modular_pq_flow(const Graph& g, int p, int q) { return decide_pq_flow(g, p, q, true).flow; }

std::vector<Rational> to_rational(const PQFlow& f) {
    std::vector<Rational> out;
    out.reserve(f.values.size());
    for (int v : f.values) out.emplace_back(v, f.q);
    return out;
}

PQFlow reduce_modulo(const PQFlow& f) {
    PQFlow r = f;
    r.modular = true;
    for (int& v : r.values) v = ((v % f.p) + f.p) % f.p;
    return r;
}

bool verify_flow(const Multipole& m, std::span<const Rational> values, const Rational& r, bool modular) {
    if (static_cast<int>(values.size()) != m.edge_count() || r < 2) return false;
    for (const auto& v : values) {
        const Rational x = modular ? mod_rational(v, r) : abs(v);
        if (x < 1 || x > r - 1) return false;
    }
    std::vector<Rational> inflow(static_cast<std::size_t>(m.vertex_count()), Rational(0));
    for (int e = 0; e < m.edge_count(); ++e) {
        const auto& ed = m.edge(e);
        inflow[static_cast<std::size_t>(ed.a)] -= values[static_cast<std::size_t>(e)];
        if (ed.b >= 0) inflow[static_cast<std::size_t>(ed.b)] += values[static_cast<std::size_t>(e)];
    }
    for (const auto& s : inflow) {
        if ((modular ? mod_rational(s, r) : s).numerator() != 0) return false;
    }
    return true;
}

std::vector<Rational> flow_number_candidates(int q_max, const Rational& limit) {
    if (q_max < 1) throw std::invalid_argument("q_max must be at least 1");
    std::vector<Rational> out;
    for (int q = 1; q <= q_max; ++q)
        for (int p = 2 * q; Rational(p, q) <= limit; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

CircularFlowNumber circular_flow_number(const Graph& g, int q_max) {
    require_graph(g, "circular flow number");
    if (has_bridge(g)) throw std::invalid_argument("graph has a bridge: no nowhere-zero flow");
    // Every bridgeless graph has a nowhere-zero 6-flow.
    const auto cands = flow_number_candidates(q_max, Rational(6));
    const auto hit = parallel_find_first<PQFlow>(cands.size(), [&](std::size_t i) {
        return has_circular_pq_flow(g, static_cast<int>(cands[i].numerator()), static_cast<int>(cands[i].denominator()));
    });
    if (!hit) throw std::logic_error("no flow up to 6 on a bridgeless graph");
    CircularFlowNumber c;
    c.value = cands[hit->first];
    c.witness = hit->second;
    c.refused.assign(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(hit->first));
    c.q_max = q_max;
    return c;
}

FlowRelation flow_relation(const Dipole& d, int p, int q, bool modular) {
    require_two_two(d, "flow relation");
    const PQAlphabet alpha(p, q, modular);
    const auto& dang = d.base().dangling_edges();
    auto where = [&](int e) { return static_cast<std::size_t>(std::find(dang.begin(), dang.end(), e) - dang.begin()); };
    const std::array<std::size_t, 4> pos{where(d.input_edge(0)), where(d.input_edge(1)), where(d.output_edge(0)),
                                         where(d.output_edge(1))};
    FlowRelation r{p, q, modular, {}};
    for (const auto& t : boundary_assignments(d.base(), alpha.rule()).boundary) {
        std::array<int, 4> v{};
        for (std::size_t k = 0; k < 4; ++k) v[k] = alpha.value(t[pos[k]]);
        r.tuples.insert(v);
    }
    return r;
}

FlowRelation compose_flow_relations(const FlowRelation& first, const FlowRelation& second) {
    if (first.p != second.p || first.q != second.q || first.modular != second.modular)
        throw std::invalid_argument("composing flow relations of different kinds");
    const int p = first.p;
    const bool modular = first.modular;
    // Values lie in (-p, p); pairs are indexed on that square.
    const int span = 2 * p + 1;
    auto pair_index = [&](int x, int y) { return static_cast<std::size_t>((x + p) * span + (y + p)); };
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> first_out, second_out;
    for (const auto& t : first.tuples) first_out[{t[0], t[1]}].emplace_back(t[2], t[3]);
    for (const auto& t : second.tuples) second_out[{t[0], t[1]}].emplace_back(t[2], t[3]);

    FlowRelation r{p, first.q, modular, {}};
    std::vector<char> seen(static_cast<std::size_t>(span * span), 0);
    std::vector<std::pair<int, int>> reached;
    for (const auto& [in, outs] : first_out) {
        reached.clear();
        for (const auto& [c, d] : outs) {
            const auto it = second_out.find({negate_value(c, p, modular), negate_value(d, p, modular)});
            if (it == second_out.end()) continue;
            for (const auto& o : it->second) {
                auto& mark = seen[pair_index(o.first, o.second)];
                if (!mark) {
                    mark = 1;
                    reached.push_back(o);
                }
            }
        }
        for (const auto& o : reached) {
            seen[pair_index(o.first, o.second)] = 0;
            r.tuples.insert({in.first, in.second, o.first, o.second});
        }
    }
    return r;
}

Rational total_through(const FlowRelation& r, const std::array<int, 4>& t) {
    int h = -(t[0] + t[1]);
    if (r.modular) {
        h = ((h % r.p) + r.p) % r.p;
        if (2 * h > r.p) h -= r.p;
    }
    return Rational(h, r.q);
}

std::set<Rational> totals_of(const FlowRelation& r) {
    std::set<Rational> out;
    for (const auto& t : r.tuples) out.insert(total_through(r, t));
    return out;
}

std::set<Rational> modular_totals_through(const Dipole& d, int p, int q) { return totals_of(flow_relation(d, p, q, true)); }

std::vector<FlowRelation> superedge_flow_relations(const SuperpositionPlan& plan, int p, int q, bool modular) {
    std::vector<char> used(plan.library.size(), 0);
    for (const auto& at : plan.edges) used.at(static_cast<std::size_t>(at.superedge)) = 1;
    return parallel_map<FlowRelation>(plan.library.size(), [&](std::size_t i) {
        return used[i] ? relation_of(plan.library[i], p, q, modular) : FlowRelation{p, q, modular, {}};
    });
}

TotalsRefutation refute_9_2_flow_on_superposition(const Superposition& s, const SuperpositionPlan& plan) {
    check_plan(s, plan);
    TotalsRefutation v;
    v.assumed_lemma =
        "half-integrality (Steffen): a cubic graph with a nowhere-zero real 9/2-flow has one whose values are "
        "multiples of 1/2, so modular (9,2) residues on the half-integer scale cover every 9/2-flow";
    const Rational r(9, 2);
    const std::set<Rational> halves{Rational(-1, 2), Rational(1, 2)};
    const auto rels = superedge_flow_relations(plan, 9, 2, true);
    std::vector<char> used(plan.library.size(), 0);
    for (const auto& at : plan.edges) used[static_cast<std::size_t>(at.superedge)] = 1;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        v.totals.push_back(used[i] ? totals_of(rels[i]) : std::set<Rational>{});
        if (!used[i]) continue;
        const auto& t = v.totals.back();
        if (!std::includes(halves.begin(), halves.end(), t.begin(), t.end())) {
            v.refusal = "superedge " + std::to_string(i) + " has modular 9/2 totals " + list_totals(t) + ", not within {-1/2, 1/2}";
            return v;
        }
        v.steps.push_back("superedge " + std::to_string(i) + ": totals of modular 9/2-flows are " + list_totals(t));
    }
    // Summed over both lifts of a base vertex, the flow into the superedge
    // connectors there vanishes modulo r: inputs carry h, outputs carry -h.
    const auto& g = plan.base;
    for (int x = 0; x < g.vertex_count() && v.blocking_vertex < 0; ++x) {
        std::set<Rational> sums{Rational(0)};
        for (int e : g.incident(x)) {
            const auto& h = v.totals[static_cast<std::size_t>(plan.edges[static_cast<std::size_t>(e)].superedge)];
            const int sign = g.edge(e).a == x ? 1 : -1;
            std::set<Rational> next;
            for (const auto& a : sums)
                for (const auto& b : h) next.insert(mod_rational(a + sign * b, r));
            sums = std::move(next);
        }
        if (!sums.contains(Rational(0))) v.blocking_vertex = x;
    }
    if (v.blocking_vertex < 0) {
        v.refusal = "every base vertex admits totals summing to 0 modulo 9/2";
        return v;
    }
    v.steps.push_back("at base vertex " + std::to_string(v.blocking_vertex) +
                      " the flow into the three superedges is a sum of three values from {-1/2, 1/2}, an odd multiple of 1/2, never 0 modulo 9/2");
    v.refuted = true;

    const auto csp = superposition_csp(s, plan, rels);
    const auto res = csp.solve();
    v.exhaustive_refuted = !res.choice;
    v.exhaustive_nodes = res.nodes;
    v.steps.push_back(std::string("exhaustive check over superedge boundary values: ") +
                      (v.exhaustive_refuted ? "no modular 9/2-flow" : "found a modular 9/2-flow") + " (" + std::to_string(res.nodes) + " nodes)");
    v.steps.push_back("with the half-integrality lemma there is no nowhere-zero 9/2-flow, so the circular flow number exceeds 9/2");
    return v;
}

std::optional<std::vector<int>> complete_dipole_flow(const Dipole& d, const PQAlphabet& alphabet, const std::array<int, 4>& boundary) {
    require_two_two(d, "complete_dipole_flow");
    EdgeSearch es(d.base(), alphabet.rule());
    const std::array<int, 4> edges{d.input_edge(0), d.input_edge(1), d.output_edge(0), d.output_edge(1)};
    for (std::size_t k = 0; k < 4; ++k)
        if (!es.restrict(edges[k], Mask{1} << alphabet.index(boundary[k]))) return std::nullopt;
    const auto found = es.first();
    if (!found) return std::nullopt;
    std::vector<int> values;
    for (int i : *found) values.push_back(alphabet.value(i));
    return values;
}

std::optional<TemplateSet> derive_superedge_templates(const Dipole& superedge) {
    require_two_two(superedge, "derive_superedge_templates");
    // Values in ±[3, M] are exactly the integer (M+3, 3)-flow alphabet.
    for (int m = 3; m <= 11; ++m) {
        const auto rel = relation_of(superedge, m + 3, 3, false);
        if (rel.tuples.empty()) continue;
        TableCsp csp;
        for (int i = 0; i < 3; ++i) csp.add_variable(as_tuples(rel));
        for (int c = 0; c < 4; ++c) csp.add_constraint({{{0, c}, {1, c}, {2, c}}}, [](int x, int y, int z) { return x + y + z == 0; });
        const auto res = csp.solve(true);
        if (!res.choice) continue;
        TemplateSet ts;
        ts.max_abs = m;
        const PQAlphabet alpha(m + 3, 3, false);
        for (int i = 0; i < 3; ++i) {
            auto& t = ts.templates[static_cast<std::size_t>(i)];
            t.colour = i;
            const auto& tup = csp.tuple(i, (*res.choice)[static_cast<std::size_t>(i)]);
            std::copy(tup.begin(), tup.end(), t.boundary.begin());
            auto inner = complete_dipole_flow(superedge, alpha, t.boundary);
            if (!inner) throw std::logic_error("boundary tuple without an internal flow");
            t.internal = std::move(*inner);
        }
        return ts;
    }
    return std::nullopt;
}

FlowConstruction construct_14_3_flow(const Superposition& s, const SuperpositionPlan& plan, std::span<const int> colouring) {
    check_plan(s, plan);
    const auto& g = plan.base;
    if (static_cast<int>(colouring.size()) != g.edge_count()) throw std::invalid_argument("colouring needs one colour per base edge");
    for (int x = 0; x < g.vertex_count(); ++x) {
        int seen = 0;
        for (int e : g.incident(x)) {
            const int c = colouring[static_cast<std::size_t>(e)];
            if (c < 0 || c > 2 || (seen >> c & 1)) throw std::invalid_argument("not a proper 3-edge-colouring of the base graph");
            seen |= 1 << c;
        }
    }
    FlowConstruction out;
    const Rational r(14, 3);
    auto accept = [&](std::vector<int> values, std::string method) {
        PQFlow f{14, 3, false, std::move(values)};
        const auto q = to_rational(f);
        if (!verify_flow(s.graph, q, r, false)) throw std::logic_error("assembled (14,3)-flow fails verification");
        out.flow = std::move(f);
        out.method = std::move(method);
        out.steps.push_back("verified: every value v satisfies 1 <= |v|/3 <= 11/3 with exact conservation");
    };

    const bool canonical = std::all_of(plan.edges.begin(), plan.edges.end(), [&](const SuperedgeAttachment& at) {
        return at.input_lift == std::array<int, 2>{0, 1} && at.output_lift == std::array<int, 2>{0, 1} &&
               uses_basic(plan.library.at(static_cast<std::size_t>(at.superedge)));
    });
    bool one_sided = true;
    for (int x = 0; x < g.vertex_count(); ++x) {
        int tails = 0;
        for (int e : g.incident(x)) tails += g.edge(e).a == x;
        one_sided = one_sided && (tails == 0 || tails == 3);
    }

    if (canonical && one_sided) {
        if (const auto ts = derive_superedge_templates()) {
            std::vector<int> values(static_cast<std::size_t>(s.graph.edge_count()), 0);
            for (int e = 0; e < g.edge_count(); ++e) {
                const auto& t = ts->templates[static_cast<std::size_t>(colouring[static_cast<std::size_t>(e)])];
                const auto& map = s.edge_map[static_cast<std::size_t>(e)];
                for (std::size_t k = 0; k < map.size(); ++k) values[static_cast<std::size_t>(map[k])] = t.internal[k];
            }
            out.steps.push_back("each superedge takes the template of its colour class (largest |value| " + std::to_string(ts->max_abs) + ")");
            accept(std::move(values), "templates");
            return out;
        }
        out.steps.push_back("no template triple exists; falling back to a complete search");
    } else {
        out.steps.push_back(canonical ? "some base vertex has both heads and tails, so colour-class templates do not apply"
                                      : "plan is not the canonical basic superposition");
    }

    const auto rels = superedge_flow_relations(plan, 14, 3, false);
    const auto balance = balanced_totals(plan, rels);
    out.nodes += balance.nodes;
    if (!balance.choice) {
        out.steps.push_back("totals of (14,3)-flows through the superedges are " + all_totals(rels));
        out.steps.push_back("no choice of totals balances at every base vertex (" + std::to_string(balance.nodes) +
                            " nodes), so the superposition has no (14,3)-flow");
        // Same argument for modular flows, which exist exactly when integer ones do.
        const auto mod_rels = superedge_flow_relations(plan, 14, 3, true);
        const auto mod_balance = balanced_totals(plan, mod_rels);
        out.nodes += mod_balance.nodes;
        out.steps.push_back("modular (14,3) totals are " + all_totals(mod_rels) +
                            (mod_balance.choice ? "; these balance modulo 14/3, so the modular check is inconclusive"
                                                : "; they do not balance modulo 14/3 either"));
        return out;
    }
    const auto csp = superposition_csp(s, plan, rels);
    const auto res = csp.solve();
    out.nodes += res.nodes;
    if (!res.choice) {
        out.steps.push_back("complete search over superedge boundary values: no (14,3)-flow (" + std::to_string(res.nodes) + " nodes)");
        return out;
    }
    const PQAlphabet alpha(14, 3, false);
    std::vector<int> values(static_cast<std::size_t>(s.graph.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& tup = csp.tuple(e, (*res.choice)[static_cast<std::size_t>(e)]);
        const auto& x = plan.library[static_cast<std::size_t>(plan.edges[static_cast<std::size_t>(e)].superedge)];
        const auto inner = complete_dipole_flow(x, alpha, {tup[0], tup[1], tup[2], tup[3]});
        if (!inner) throw std::logic_error("boundary tuple without an internal flow");
        const auto& map = s.edge_map[static_cast<std::size_t>(e)];
        for (std::size_t k = 0; k < map.size(); ++k) values[static_cast<std::size_t>(map[k])] = (*inner)[k];
    }
    out.steps.push_back("boundary values from a complete search over superedge relations (" + std::to_string(res.nodes) + " nodes)");
    accept(std::move(values), "search");
    return out;
}

}  // namespace snark
