// snarkkit: command-line front end. Exit status 0 on success, 1 when the
// verdict is negative, 2 on errors.
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "snark/circular_flow.hpp"
#include "snark/io.hpp"
#include "snark/invariants.hpp"
#include "snark/matching.hpp"
#include "snark/parallel.hpp"
#include "snark/pipeline.hpp"
#include "snark/superposition.hpp"
#include "snark/tetra_flow.hpp"
#include "snark/transitions.hpp"

using namespace snark;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct Common {
    int threads = 1;
    std::uint64_t seed = 2025;
    bool json = false;
    std::string out;
};

Json document(const std::string& operation, const std::string& input, const Common& c) {
    return {{"tool", "snarkkit"}, {"operation", operation}, {"input", input}, {"seed", c.seed}};
}

/// Prints the summary line (or the document with --json) and stores the
/// document when --out is given.
int emit(Json doc, const std::string& line, bool positive, const Common& c, std::chrono::steady_clock::time_point t0) {
    doc["verdict"] = positive ? "positive" : "negative";
    doc["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    if (c.json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << line << '\n';
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::runtime_error("cannot write " + c.out);
        f << doc.dump(2) << '\n';
    }
    return positive ? exit_ok : exit_negative;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect matching index, tetrahedral flows, superpositions and circular flows of cubic graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", common.seed, "seed for randomised checks");
    app.add_flag("--json", common.json, "print the full result document");
    app.add_option("--out", common.out, "also write the result document to this file");

    std::string target, plan_spec, flow_out;
    int cap = 5, qmax = 3, p = 9, q = 2;
    bool integer = false;

    auto* pmi = app.add_subcommand("pmi", "perfect matching index, up to a cap");
    pmi->add_option("graph", target, "builtin name or file")->required();
    pmi->add_option("--cap", cap, "largest index searched")->check(CLI::Range(3, 64));

    auto* tf = app.add_subcommand("tetraflow", "find a tetrahedral flow");
    tf->add_option("graph", target)->required();

    auto* tr = app.add_subcommand("transitions", "transition relation of a (2,2)-pole");
    tr->add_option("dipole", target, "decollineator, q-dipole, superedge, pass-through or a file")->required();

    auto* build = app.add_subcommand("build-superposition", "assemble a superposition and certify pi >= 5");
    build->add_option("plan", plan_spec, "builtin base graph name or plan file")->required();
    build->add_option("--write", flow_out, "write the graph as a multipole document");

    auto* cfn = app.add_subcommand("cfn", "circular flow number over denominators up to --qmax");
    cfn->add_option("graph", target)->required();
    cfn->add_option("--qmax", qmax)->check(CLI::Range(1, 12));

    auto* totals = app.add_subcommand("totals", "total flows through a (2,2)-pole");
    totals->add_option("dipole", target)->required();
    totals->add_option("-p", p)->required();
    totals->add_option("-q", q)->required();
    totals->add_flag("--integer", integer, "integer instead of modular flows");

    auto* flows = app.add_subcommand("flow-bounds", "9/2 refutation and 14/3 construction on a superposition");
    flows->add_option("plan", plan_spec)->required();

    auto* verify_all = app.add_subcommand("verify-paper", "run every acceptance check");

    auto* verify = app.add_subcommand("verify", "re-check the witnesses in a result document");
    verify->add_option("document", target)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }
    set_max_threads(common.threads);
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (*pmi) {
            const auto g = load_graph(target);
            const auto r = perfect_matching_index(g, cap);
            auto doc = document("pmi", target, common);
            doc["cap"] = cap;
            doc["result"] = r.value ? Json(*r.value) : Json();
            doc["certificate"] = {{"graph", write_multipole(g)}, {"pmi", doc["result"]}, {"cover", cover_json(r.certificate)}};
            doc["stats"] = {{"matchings", r.matchings}, {"nodes", r.nodes}};
            return emit(doc, r.value ? std::to_string(*r.value) : "> " + std::to_string(cap), r.value.has_value(), common, t0);
        }
        if (*tf) {
            const auto g = load_graph(target);
            const auto r = find_tetra_flow(g);
            auto doc = document("tetraflow", target, common);
            doc["result"] = r.flow.has_value();
            if (r.flow) doc["certificate"] = {{"graph", write_multipole(g)}, {"tetra_flow", tetra_flow_json(*r.flow)}};
            doc["stats"] = {{"nodes", r.stats.nodes}};
            std::string line = r.flow ? "flow" : "none";
            if (r.flow)
                for (const auto& x : *r.flow) line += " " + std::to_string(x.bits());
            return emit(doc, line, r.flow.has_value(), common, t0);
        }
        if (*tr) {
            const auto d = load_dipole(target);
            const auto t = transition_relation(d);
            auto doc = document("transitions", target, common);
            doc["result"] = t.shapes.tokens();
            doc["certificate"] = {{"boundary_tuples", t.boundary.size()}, {"pair_transitions", t.pairs.size()},
                                  {"admissible", admissibility_check(t)},   {"decollineator", is_decollineator(t)},
                                  {"deangulator", is_deangulator(t)},       {"heavy", is_heavy(t)}};
            doc["stats"] = {{"queries", t.queries}};
            return emit(doc, join(t.shapes.tokens(), " "), true, common, t0);
        }
        if (*build) {
            const auto plan = load_plan(plan_spec);
            const auto s = assemble_superposition(plan);
            const auto cert = certify_heaviness(plan);
            const auto v = certify_pmi_at_least_5(s, plan, cert);
            if (!flow_out.empty()) {
                std::ofstream f(flow_out);
                if (!f) throw std::runtime_error("cannot write " + flow_out);
                f << write_multipole(s.graph);
            }
            auto doc = document("build-superposition", plan_spec, common);
            doc["result"] = {{"vertices", s.graph.vertex_count()}, {"edges", s.graph.edge_count()}, {"graph6", write_graph6(s.graph)}};
            doc["certificate"] = {{"pmi_at_least_5", v.at_least_five}, {"steps", v.steps}, {"refusal", v.refusal},
                                  {"average_heavy_per_superedge", to_string(v.average_per_superedge)}};
            return emit(doc, std::to_string(s.graph.vertex_count()) + " vertices; " + (v.at_least_five ? "pi >= 5" : "not certified: " + v.refusal),
                        v.at_least_five, common, t0);
        }
        if (*cfn) {
            const auto g = load_graph(target);
            const auto c = circular_flow_number(g, qmax);
            auto doc = document("cfn", target, common);
            doc["result"] = to_string(c.value);
            Json refused = Json::array();
            for (const auto& r : c.refused) refused.push_back(to_string(r));
            doc["certificate"] = {{"graph", write_multipole(g)}, {"flow", flow_json(g, c.witness)}, {"refused", refused}, {"q_max", c.q_max},
                                  {"note", "exact among denominators up to q_max"}};
            return emit(doc, to_string(c.value), true, common, t0);
        }
        if (*totals) {
            const auto d = load_dipole(target);
            const auto rel = flow_relation(d, p, q, !integer);
            Json t = Json::array();
            std::vector<std::string> words;
            for (const auto& x : totals_of(rel)) {
                t.push_back(to_string(x));
                words.push_back(to_string(x));
            }
            auto doc = document("totals", target, common);
            doc["p"] = p;
            doc["q"] = q;
            doc["modular"] = !integer;
            doc["result"] = t;
            doc["stats"] = {{"boundary_tuples", rel.tuples.size()}};
            return emit(doc, words.empty() ? "none" : join(words, " "), !words.empty(), common, t0);
        }
        if (*flows) {
            const auto plan = load_plan(plan_spec);
            const auto s = assemble_superposition(plan);
            const auto low = refute_9_2_flow_on_superposition(s, plan);
            Json up;
            bool has_up = false;
            if (const auto col = three_edge_colouring(plan.base)) {
                const auto c = construct_14_3_flow(s, plan, *col);
                has_up = c.flow.has_value();
                up = {{"method", c.method}, {"steps", c.steps}, {"nodes", c.nodes}};
                if (c.flow) up["witness"] = {{"graph", write_multipole(s.graph)}, {"flow", flow_json(s.graph, *c.flow)}};
            } else {
                up = {{"steps", {"base graph is not 3-edge-colourable"}}};
            }
            auto doc = document("flow-bounds", plan_spec, common);
            doc["result"] = {{"above_9_2", low.refuted}, {"at_most_14_3", has_up}};
            doc["certificate"] = {{"lower", {{"steps", low.steps}, {"assumed_lemma", low.assumed_lemma}, {"refusal", low.refusal}}}, {"upper", up}};
            const std::string line = std::string(low.refuted ? "flow number > 9/2" : "9/2 not refuted") + "; " +
                                     (has_up ? "flow number <= 14/3" : "no 14/3-flow found");
            return emit(doc, line, low.refuted && has_up, common, t0);
        }
        if (*verify_all) {
            PipelineOptions opt;
            opt.seed = common.seed;
            std::vector<CriterionResult> results;
            for (int id = 1; id <= criterion_count; ++id) {
                results.push_back(run_criterion(id, opt));
                const auto& r = results.back();
                if (!common.json) std::cout << "acc_" << r.id << (r.passed ? " PASS  " : " FAIL  ") << r.title << "\n      " << r.detail << '\n';
            }
            auto doc = summary_document(results, opt);
            doc["tool"] = "snarkkit";
            const bool all = doc["passed"].get<int>() == criterion_count;
            return emit(doc, std::to_string(doc["passed"].get<int>()) + " of " + std::to_string(criterion_count) + " criteria pass", all, common, t0);
        }
        if (*verify) {
            const auto doc = Json::parse(read_file(target));
            const auto rep = verify_document(doc);
            auto out = document("verify", target, common);
            out["result"] = {{"checked", rep.checked}, {"problems", rep.problems}};
            std::string line = std::to_string(rep.checked) + " witnesses checked";
            for (const auto& pr : rep.problems) line += "\n  " + pr;
            return emit(out, line, rep.problems.empty() && rep.checked > 0, common, t0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
