#include "snark/pipeline.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "snark/census.hpp"
#include "snark/graphs.hpp"
#include "snark/invariants.hpp"
#include "snark/io.hpp"
#include "snark/parallel.hpp"
#include "snark/random_graphs.hpp"
#include "snark/superposition.hpp"
#include "snark/transitions.hpp"

namespace snark {

namespace {

struct Spec {
    const char* title;
    double budget;
    std::function<bool(const PipelineOptions&, Json&, std::string&)> run;
};

Json tokens(const ShapeRelation& r) { return r.tokens(); }

Json totals_json(const std::set<Rational>& t) {
    Json a = Json::array();
    for (const auto& x : t) a.push_back(to_string(x));
    return a;
}

bool c1(const PipelineOptions&, Json& cert, std::string& detail) {
    const std::vector<std::pair<std::string, int>> want{{"k4", 3}, {"prism", 3}, {"k33", 3}, {"petersen", 5}};
    bool ok = true;
    for (const auto& [name, expected] : want) {
        const auto g = *builtin_graph(name);
        const auto r = perfect_matching_index(g, 5);
        const bool hit = r.value == expected && is_cover(g, r.certificate) && static_cast<int>(r.certificate.size()) == expected;
        ok = ok && hit;
        cert.push_back({{"name", name}, {"graph", write_multipole(g)}, {"pmi", r.value ? Json(*r.value) : Json()},
                        {"cover", cover_json(r.certificate)}, {"matchings", r.matchings}, {"nodes", r.nodes}});
        detail += name + "=" + (r.value ? std::to_string(*r.value) : "none") + " ";
    }
    detail += "(Petersen: no cover by 4 exists, the search below 5 was exhausted)";
    return ok;
}

bool c2(const PipelineOptions&, Json& cert, std::string& detail) {
    const auto census = bridgeless_cubic_census(10);
    const auto rows = parallel_map<Json>(census.size(), [&](std::size_t i) {
        const auto& g = census[i];
        const auto r = perfect_matching_index(g, 5);
        const auto f = find_tetra_flow(g);
        const bool four = r.value && *r.value <= 4;
        bool round = true;
        if (f.flow) {
            const auto c = flow_to_cover(g, *f.flow);
            round = round && c.size() == 4 && is_cover(g, c) && cover_to_flow(g, c) == *f.flow;
        }
        if (four) {
            auto c = r.certificate;
            while (c.size() < 4) c.push_back(c.front());
            const auto flow = cover_to_flow(g, c);
            round = round && is_valid_tetra_flow(g, Tetrahedron::canonical(), flow) && flow_to_cover(g, flow) == c;
        }
        return Json{{"graph6", write_graph6(g)}, {"pmi", r.value ? Json(*r.value) : Json()}, {"tetra_flow", f.flow.has_value()},
                    {"agree", four == f.flow.has_value()}, {"round_trip", round},
                    {"ordered_four_covers", count_ordered_four_covers(g)}, {"tetra_flows", count_tetra_flows(g)}};
    });
    int agree = 0, round = 0, equal_counts = 0;
    for (const auto& row : rows) {
        agree += row["agree"].get<bool>();
        equal_counts += row["ordered_four_covers"] == row["tetra_flows"];
        round += row["round_trip"].get<bool>();
        cert.push_back(row);
    }
    const int n = static_cast<int>(rows.size());
    detail = std::to_string(n) + " bridgeless cubic graphs on <= 10 vertices; equivalence on " + std::to_string(agree) +
             ", round trips on " + std::to_string(round) +
             "; ordered 4-cover count equals T-flow count on " + std::to_string(equal_counts) + " (reported only)";
    return n > 0 && agree == n && round == n;
}

bool c3(const PipelineOptions& opt, Json& cert, std::string& detail) {
    const std::uint64_t seed = opt.seed;
    Rng rng(seed);
    std::vector<Dipole> poles;
    for (int i = 0; i < 200; ++i) poles.push_back(random_two_two_pole(rng, 12));
    const auto verdicts = parallel_map<char>(poles.size(), [&](std::size_t i) { return static_cast<char>(admissibility_check(transition_relation(poles[i]))); });
    int good = 0;
    Json bad = Json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        good += verdicts[i];
        if (!verdicts[i]) bad.push_back(i);
    }
    cert = {{"seed", seed}, {"poles", poles.size()}, {"admissible", good}, {"exceptions", bad}};
    detail = std::to_string(good) + " of 200 random (2,2)-poles satisfy T(X) within A";
    return good == 200;
}

struct NamedRelations {
    Transitions dec, q, sup;
};

// Recomputed on every call so that the thread-count comparison covers it.
NamedRelations named_relations() {
    return {transition_relation(petersen_decollineator()), transition_relation(petersen_q_dipole()), transition_relation(basic_superedge())};
}

bool c4(const PipelineOptions&, Json& cert, std::string& detail) {
    const auto r = named_relations();
    const bool d = r.dec.shapes == decollineator_transitions();
    const bool q = r.q.shapes == q_transitions();
    const bool s = r.sup.shapes == heavy_transitions();
    auto part = [](const Transitions& t, bool eq) {
        return Json{{"shapes", tokens(t.shapes)}, {"pairs", t.pairs.size()}, {"boundary_tuples", t.boundary.size()}, {"equal", eq}};
    };
    cert = {{"decollineator", part(r.dec, d)}, {"q_dipole", part(r.q, q)}, {"superedge", part(r.sup, s)}};
    detail = std::string("T(D_Ps) = D: ") + (d ? "yes" : "no") + ", T(Q_Ps) = Q: " + (q ? "yes" : "no") +
             ", T(superedge) = R: " + (s ? "yes" : "no");
    return d && q && s;
}

bool c5(const PipelineOptions&, Json& cert, std::string& detail) {
    const auto dqd = compose_relations(decollineator_transitions(), compose_relations(q_transitions(), decollineator_transitions()));
    const bool algebra = dqd == heavy_transitions();
    const bool q_dea = !q_transitions().contains(Shape::ang, Shape::ang);
    const auto r = named_relations();
    const bool heavy = is_heavy(r.sup), decol = is_decollineator(r.sup);
    const bool exact = compose_boundaries(r.dec.boundary, compose_boundaries(r.q.boundary, r.dec.boundary)) == r.sup.boundary;
    cert = {{"composition", tokens(dqd)}, {"composition_equals_R", algebra}, {"q_has_no_ang_to_ang", q_dea},
            {"superedge_heavy", heavy}, {"superedge_decollineator", decol}, {"boundary_composition_exact", exact}};
    detail = std::string("D.Q.D = R: ") + (algebra ? "yes" : "no") + "; Q deangulating: " + (q_dea ? "yes" : "no") +
             "; superedge heavy decollineator: " + (heavy && decol ? "yes" : "no");
    return algebra && q_dea && heavy && decol && exact;
}

bool superposition_facts(const Graph& base, int vertices, Json& cert, std::string& detail) {
    const auto plan = canonical_plan(base);
    const auto s = heavy_superposition(plan);
    const auto& g = s.graph;
    const int gi = girth(g);
    const bool cyc = cyclic_connectivity_at_least(g, 4);
    const bool col = is_three_edge_colourable(g);
    const auto pmi = certify_pmi_at_least_5(s, plan, certify_heaviness(plan));
    cert = {{"vertices", g.vertex_count()}, {"girth", gi},    {"cyclically_4_edge_connected", cyc}, {"three_edge_colourable", col},
            {"pmi_at_least_5", pmi.at_least_five}, {"pmi_steps", pmi.steps}, {"average_heavy_per_superedge", to_string(pmi.average_per_superedge)}};
    detail = "|V| = " + std::to_string(g.vertex_count()) + ", girth " + std::to_string(gi) + (cyc ? ", cyclically 4-edge-connected" : ", NOT cyclically 4-edge-connected") +
             (col ? ", 3-edge-colourable" : ", not 3-edge-colourable") + (pmi.at_least_five ? ", pi >= 5 certified" : ", pi >= 5 refused: " + pmi.refusal);
    return g.vertex_count() == vertices && gi == 5 && cyc && !col && pmi.at_least_five;
}

bool c6(const PipelineOptions&, Json& cert, std::string& detail) { return superposition_facts(theta(), 82, cert, detail); }

bool c7(const PipelineOptions&, Json& cert, std::string& detail) {
    const auto g = petersen();
    const auto five = has_circular_pq_flow(g, 5, 1);
    bool ok = five && verify_flow(g, to_rational(*five), Rational(5), false);
    Json refused = Json::array();
    for (auto [p, q] : {std::pair{9, 2}, {13, 3}, {14, 3}}) {
        const bool none = !has_circular_pq_flow(g, p, q);
        ok = ok && none;
        refused.push_back({{"p", p}, {"q", q}, {"flow", !none}});
    }
    const auto c = circular_flow_number(g, 3);
    ok = ok && c.value == Rational(5);
    Json below = Json::array();
    for (const auto& r : c.refused) below.push_back(to_string(r));
    cert = {{"five_flow", {{"graph", write_multipole(g)}, {"flow", five ? flow_json(g, *five) : Json()}}},
            {"refused", refused},
            {"circular_flow_number", to_string(c.value)},
            {"q_max", c.q_max},
            {"candidates_refused", below},
            {"witness", {{"graph", write_multipole(g)}, {"flow", flow_json(g, c.witness)}}}};
    detail = "(5,1)-flow " + std::string(five ? "found" : "missing") + "; (9,2), (13,3), (14,3) refused; flow number (q <= 3) = " + to_string(c.value) +
             " with " + std::to_string(c.refused.size()) + " smaller candidates refused";
    return ok;
}

bool lower_bound(const Graph& base, Json& cert, std::string& detail) {
    const auto d = modular_totals_through(petersen_decollineator(), 9, 2);
    const auto q = modular_totals_through(petersen_q_dipole(), 9, 2);
    bool d_ok = true;
    for (const auto& x : d) d_ok = d_ok && x > Rational(-1) && x < Rational(1);
    const bool q_ok = !q.contains(Rational(0));
    const auto plan = canonical_plan(base);
    const auto s = assemble_superposition(plan);
    const auto v = refute_9_2_flow_on_superposition(s, plan);
    const std::set<Rational> halves{Rational(-1, 2), Rational(1, 2)};
    const bool se_ok = !v.totals.empty() && std::includes(halves.begin(), halves.end(), v.totals[0].begin(), v.totals[0].end()) && !v.totals[0].empty();
    cert = {{"decollineator_totals", totals_json(d)}, {"q_dipole_totals", totals_json(q)}, {"superedge_totals", v.totals.empty() ? Json() : totals_json(v.totals[0])},
            {"refuted", v.refuted}, {"exhaustive_refuted", v.exhaustive_refuted}, {"exhaustive_nodes", v.exhaustive_nodes},
            {"blocking_vertex", v.blocking_vertex}, {"steps", v.steps}, {"assumed_lemma", v.assumed_lemma}, {"refusal", v.refusal}};
    detail = "D_Ps totals " + Json(totals_json(d)).dump() + ", Q_Ps totals " + Json(totals_json(q)).dump() + ", superedge totals " +
             cert["superedge_totals"].dump() + (v.refuted ? "; flow number > 9/2" : "; refutation failed: " + v.refusal);
    return d_ok && q_ok && se_ok && v.refuted && v.exhaustive_refuted;
}

bool c8(const PipelineOptions&, Json& cert, std::string& detail) { return lower_bound(theta(), cert, detail); }

bool upper_bound(const Graph& base, Json& cert, std::string& detail) {
    const auto ts = derive_superedge_templates();
    Json tj = Json::array();
    if (ts)
        for (const auto& t : ts->templates) tj.push_back({{"colour", t.colour}, {"boundary", t.boundary}, {"internal", t.internal}});
    const auto plan = canonical_plan(base);
    const auto s = assemble_superposition(plan);
    const auto col = three_edge_colouring(base);
    if (!col) throw std::invalid_argument("base graph is not 3-edge-colourable");
    const auto c = construct_14_3_flow(s, plan, *col);
    bool ok = ts.has_value() && c.flow.has_value();
    if (c.flow) {
        const auto q = to_rational(*c.flow);
        ok = ok && verify_flow(s.graph, q, Rational(14, 3), false);
        for (const auto& x : q) ok = ok && abs(x) >= Rational(1) && abs(x) <= Rational(11, 3);
    }
    cert = {{"templates", tj}, {"template_max_abs", ts ? ts->max_abs : 0}, {"colouring", *col}, {"method", c.method}, {"steps", c.steps}, {"nodes", c.nodes},
            {"witness", c.flow ? Json{{"graph", write_multipole(s.graph)}, {"flow", flow_json(s.graph, *c.flow)}} : Json()}};
    detail = std::string(ts ? "templates found (max |value| " + std::to_string(ts->max_abs) + ")" : "no templates") +
             (c.flow ? "; verified 14/3-flow via " + c.method : "; no 14/3-flow");
    if (!c.flow)
        for (const auto& step : c.steps) detail += "; " + step;
    return ok;
}

bool c9(const PipelineOptions&, Json& cert, std::string& detail) { return upper_bound(theta(), cert, detail); }

bool c10(const PipelineOptions&, Json& cert, std::string& detail) {
    std::string d6, d8, d9;
    Json j6, j8, j9;
    const bool a = superposition_facts(k4(), 164, j6, d6);
    const bool b = lower_bound(k4(), j8, d8);
    const bool c = upper_bound(k4(), j9, d9);
    cert = {{"structure", j6}, {"lower_bound", j8}, {"upper_bound", j9}};
    detail = std::string("structure ") + (a ? "ok" : "FAIL") + ", lower bound " + (b ? "ok" : "FAIL") + ", upper bound " + (c ? "ok" : "FAIL") +
             (c ? "" : " (" + d9 + ")");
    return a && b && c;
}

const std::vector<Spec>& specs();

bool c11(const PipelineOptions& opt, Json& cert, std::string& detail) {
    const int before = max_threads();
    const int many = std::max(4, static_cast<int>(std::thread::hardware_concurrency()));
    std::vector<std::string> dumps;
    for (int threads : {1, many}) {
        set_max_threads(threads);
        Json all = Json::array();
        for (int id = 1; id < criterion_count; ++id) {
            Json c;
            std::string d;
            const bool pass = specs()[static_cast<std::size_t>(id - 1)].run(opt, c, d);
            all.push_back({{"id", id}, {"passed", pass}, {"certificate", c}});
        }
        dumps.push_back(all.dump());
    }
    set_max_threads(before);
    const bool same = dumps[0] == dumps[1];
    cert = {{"threads", {1, many}}, {"identical", same}, {"bytes", dumps[0].size()}};
    detail = "criteria 1-10 at 1 and " + std::to_string(many) + " threads: certificates " + (same ? "identical" : "DIFFER");
    return same;
}

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s{
        {"perfect matching index of K4, prism, K3,3 and Petersen", 5, c1},
        {"pi <= 4 iff a tetrahedral flow exists, census up to 10 vertices", 300, c2},
        {"200 random (2,2)-poles are admissible", 600, c3},
        {"transition relations of D_Ps, Q_Ps and the basic superedge", 1800, c4},
        {"relation algebra D.Q.D = R and the superedge criteria", 600, c5},
        {"82-vertex superposition of theta", 3600, c6},
        {"circular flows on the Petersen graph", 600, c7},
        {"lower bound 9/2 via total flows", 3600, c8},
        {"upper bound 14/3 via superedge templates", 600, c9},
        {"the same pipeline on the 164-vertex superposition of K4", 7200, c10},
        {"certificates do not depend on the thread count", 7200, c11},
    };
    return s;
}

std::vector<Rational> parse_values(const Json& edges) {
    std::vector<Rational> v;
    for (const auto& e : edges) v.push_back(parse_rational(e.at("value").get<std::string>()));
    return v;
}

void verify_node(const Json& j, const std::string& path, VerifyReport& rep) {
    if (j.is_object()) {
        if (j.contains("graph") && j["graph"].is_string()) {
            const auto g = parse_multipole(j["graph"].get<std::string>());
            auto fail = [&](const std::string& what) { rep.problems.push_back(path + ": " + what); };
            if (j.contains("cover") && j["cover"].is_array() && !j["cover"].empty()) {
                ++rep.checked;
                const Cover c = j["cover"].get<Cover>();
                if (!is_cover(g, c)) fail("cover does not cover every edge with perfect matchings");
                if (j.contains("pmi") && j["pmi"].is_number() && j["pmi"].get<std::size_t>() != c.size()) fail("cover size differs from the index");
            }
            if (j.contains("tetra_flow") && j["tetra_flow"].is_array()) {
                ++rep.checked;
                TetraFlow f;
                for (int b : j["tetra_flow"]) f.emplace_back(b);
                if (!is_valid_tetra_flow(g, Tetrahedron::canonical(), f)) fail("tetrahedral flow is invalid");
            }
            if (j.contains("flow") && j["flow"].is_object()) {
                ++rep.checked;
                const auto& f = j["flow"];
                const Rational r(f.at("p").get<int>(), f.at("q").get<int>());
                const auto values = parse_values(f.at("edges"));
                if (!verify_flow(g, values, r, f.at("modular").get<bool>())) fail("flow fails verification at r = " + to_string(r));
                const auto& edges = f.at("edges");
                for (std::size_t e = 0; e < edges.size() && e < static_cast<std::size_t>(g.edge_count()); ++e)
                    if (edges[e].at("from").get<int>() != g.edge(static_cast<int>(e)).a || edges[e].at("to").get<int>() != g.edge(static_cast<int>(e)).b)
                        fail("orientation of edge " + std::to_string(e) + " does not match the graph");
            }
        }
        for (const auto& [k, v] : j.items()) verify_node(v, path + "/" + k, rep);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) verify_node(j[i], path + "/" + std::to_string(i), rep);
    }
}

}  // namespace

std::string criterion_title(int id) { return specs().at(static_cast<std::size_t>(id - 1)).title; }

CriterionResult run_criterion(int id, const PipelineOptions& options) {
    if (id < 1 || id > criterion_count) throw std::out_of_range("no criterion " + std::to_string(id));
    const auto& s = specs()[static_cast<std::size_t>(id - 1)];
    CriterionResult r;
    r.id = id;
    r.title = s.title;
    r.budget_seconds = s.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = s.run(options, r.certificate, r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.passed && r.seconds > r.budget_seconds) {
        r.passed = false;
        r.detail += "; over the time budget";
    }
    return r;
}

std::vector<CriterionResult> run_all_criteria(const PipelineOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, options));
    return out;
}

Json summary_document(const std::vector<CriterionResult>& results, const PipelineOptions& options) {
    Json doc{{"operation", "verify-paper"}, {"seed", options.seed}};
    Json crit = Json::array();
    Json timing = Json::object();
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed;
        crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"certificate", r.certificate}});
        timing["criterion_" + std::to_string(r.id)] = {{"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}};
    }
    doc["criteria"] = crit;
    doc["passed"] = passed;
    doc["total"] = results.size();
    doc["verdict"] = passed == static_cast<int>(results.size()) ? "all criteria pass" : "some criteria fail";
    doc["timing"] = timing;
    return doc;
}

Json flow_json(const Multipole& m, const PQFlow& f) {
    Json edges = Json::array();
    for (int e = 0; e < m.edge_count(); ++e) {
        const auto& ed = m.edge(e);
        edges.push_back({{"edge", e}, {"from", ed.a}, {"to", ed.b}, {"value", to_string(Rational(f.values.at(static_cast<std::size_t>(e)), f.q))}});
    }
    return {{"p", f.p}, {"q", f.q}, {"modular", f.modular}, {"r", to_string(Rational(f.p, f.q))}, {"edges", edges}};
}

Json cover_json(const Cover& c) { return c; }

Json tetra_flow_json(const TetraFlow& f) {
    Json a = Json::array();
    for (const auto& p : f) a.push_back(p.bits());
    return a;
}

VerifyReport verify_document(const Json& doc) {
    VerifyReport rep;
    try {
        verify_node(doc, "", rep);
    } catch (const std::exception& e) {
        rep.problems.push_back(std::string("malformed certificate: ") + e.what());
    }
    return rep;
}

}  // namespace snark
