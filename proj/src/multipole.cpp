#include "snark/multipole.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace snark {

namespace {

std::invalid_argument bad(std::string_view what) { return std::invalid_argument(std::string(what)); }

std::string connector_label(Side s, int i) { return (s == Side::input ? "in:" : "out:") + std::to_string(i); }

}  // namespace

Multipole::Multipole(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw bad("negative vertex count");
    incidence_.assign(static_cast<std::size_t>(vertex_count_), {-1, -1, -1});
    std::vector<int> degree(static_cast<std::size_t>(vertex_count_), 0);
    std::set<std::string, std::less<>> labels;

    auto attach = [&](int v, int e) {
        if (v < 0 || v >= vertex_count_) throw bad("edge " + std::to_string(e) + " has an unknown end vertex");
        auto& d = degree[static_cast<std::size_t>(v)];
        if (d == 3) throw bad("vertex " + std::to_string(v) + " has more than three edge ends");
        incidence_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d++)] = e;
    };

    for (int e = 0; e < edge_count(); ++e) {
        auto& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.a < 0 && ed.b >= 0) {
            std::swap(ed.a, ed.b);
        }
        if (ed.a < 0) throw bad("edge " + std::to_string(e) + " has no attached end");
        if (ed.b >= 0) {
            if (ed.a == ed.b) throw bad("edge " + std::to_string(e) + " is a loop");
            ed.label.clear();
            attach(ed.a, e);
            attach(ed.b, e);
        } else {
            if (ed.label.empty()) throw bad("dangling edge " + std::to_string(e) + " has no label");
            if (!labels.insert(ed.label).second) throw bad("duplicate dangling label " + ed.label);
            attach(ed.a, e);
            dangling_.push_back(e);
        }
    }
    for (int v = 0; v < vertex_count_; ++v) {
        if (degree[static_cast<std::size_t>(v)] != 3)
            throw bad("vertex " + std::to_string(v) + " is not cubic");
    }
}

int Multipole::other_end(int e, int v) const {
    const auto& ed = edge(e);
    if (ed.a == v) return ed.b;
    if (ed.b == v) return ed.a;
    throw bad("edge not incident with vertex");
}

std::optional<int> Multipole::find_dangling(std::string_view label) const {
    for (int e : dangling_)
        if (edges_[static_cast<std::size_t>(e)].label == label) return e;
    return std::nullopt;
}

int Multipole::dangling_edge(std::string_view label) const {
    if (auto e = find_dangling(label)) return *e;
    throw bad("unknown dangling label " + std::string(label));
}

void require_graph(const Multipole& m, std::string_view what) {
    if (!m.is_graph()) throw bad(std::string(what) + ": expected a graph without dangling edges");
}

Dipole::Dipole(Multipole base, std::vector<std::string> input, std::vector<std::string> output)
    : base_(std::move(base)), input_(std::move(input)), output_(std::move(output)) {
    if (input_.size() != output_.size()) throw bad("connector sizes differ");
    std::set<std::string> seen;
    for (const auto& l : input_) {
        if (!seen.insert(l).second) throw bad("label " + l + " listed twice");
        input_edges_.push_back(base_.dangling_edge(l));
    }
    for (const auto& l : output_) {
        if (!seen.insert(l).second) throw bad("label " + l + " listed twice");
        output_edges_.push_back(base_.dangling_edge(l));
    }
    if (static_cast<int>(seen.size()) != base_.dangling_count())
        throw bad("connectors must contain every dangling edge");
}

void require_two_two(const Dipole& d, std::string_view what) {
    if (d.arity() != 2) throw bad(std::string(what) + ": expected a (2,2)-pole");
}

Multipole junction(const Multipole& m, std::string_view s, std::string_view t) {
    if (s == t) throw bad("junction of a dangling edge with itself");
    const int es = m.dangling_edge(s);
    const int et = m.dangling_edge(t);
    const int u = m.edge(es).a;
    const int v = m.edge(et).a;
    if (u == v) throw bad("junction would create a loop");
    std::vector<Edge> edges;
    edges.reserve(m.edges().size() - 1);
    for (int e = 0; e < m.edge_count(); ++e) {
        if (e == es)
            edges.push_back(Edge::inner(u, v));
        else if (e != et)
            edges.push_back(m.edge(e));
    }
    return Multipole(m.vertex_count(), std::move(edges));
}

Composition compose_with_map(const Dipole& first, const Dipole& second) {
    if (first.arity() != second.arity()) throw bad("connector size mismatch in composition");
    for (const auto& l : first.input())
        if (std::find(second.output().begin(), second.output().end(), l) != second.output().end())
            throw bad("composition would duplicate label " + l);

    const int shift = first.vertex_count();
    std::map<int, int> joined;  // output edge of first -> input edge of second
    for (int i = 0; i < first.arity(); ++i) joined[first.output_edge(i)] = second.input_edge(i);
    std::set<int> consumed;
    for (int i = 0; i < second.arity(); ++i) consumed.insert(second.input_edge(i));

    Composition c;
    std::vector<Edge> edges;
    for (int e = 0; e < first.base().edge_count(); ++e) {
        const auto& ed = first.base().edge(e);
        if (auto it = joined.find(e); it != joined.end()) {
            const int v = second.base().edge(it->second).a + shift;
            if (ed.a == v) throw bad("composition would create a loop");
            edges.push_back(Edge::inner(ed.a, v));
        } else {
            edges.push_back(ed);
        }
        c.origin.push_back({0, e});
    }
    for (int e = 0; e < second.base().edge_count(); ++e) {
        if (consumed.contains(e)) continue;
        auto ed = second.base().edge(e);
        ed.a += shift;
        if (ed.b >= 0) ed.b += shift;
        edges.push_back(std::move(ed));
        c.origin.push_back({1, e});
    }
    Multipole base(shift + second.vertex_count(), std::move(edges));
    c.dipole = Dipole(std::move(base), first.input(), second.output());
    return c;
}

Dipole compose(const Dipole& first, const Dipole& second) { return compose_with_map(first, second).dipole; }

Dipole sever(const Graph& g, std::span<const EdgeCut> cuts) {
    require_graph(g, "sever");
    std::set<int> seen;
    for (const auto& c : cuts) {
        if (c.edge < 0 || c.edge >= g.edge_count()) throw bad("sever: edge not in graph");
        if (!seen.insert(c.edge).second) throw bad("sever: edge listed twice");
    }
    std::vector<std::string> input, output;
    auto next_label = [&](Side s) {
        auto& conn = (s == Side::input) ? input : output;
        conn.push_back(connector_label(s, static_cast<int>(conn.size())));
        return conn.back();
    };
    std::map<int, std::string> label_a;
    std::vector<Edge> tail;
    for (const auto& c : cuts) {
        label_a[c.edge] = next_label(c.end_a);
        tail.push_back(Edge::free(g.edge(c.edge).b, next_label(c.end_b)));
    }
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (auto it = label_a.find(e); it != label_a.end())
            edges.push_back(Edge::free(g.edge(e).a, it->second));
        else
            edges.push_back(g.edge(e));
    }
    edges.insert(edges.end(), tail.begin(), tail.end());
    return Dipole(Multipole(g.vertex_count(), std::move(edges)), std::move(input), std::move(output));
}

Dipole sever_same_edge(const Graph& g, int input_edge, int output_edge) {
    const std::array<EdgeCut, 2> cuts{EdgeCut{input_edge, Side::input, Side::input},
                                      EdgeCut{output_edge, Side::output, Side::output}};
    return sever(g, cuts);
}

Multipole remove_vertices(const Graph& g, std::span<const int> vs) {
    require_graph(g, "remove_vertices");
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) throw bad("remove_vertices: vertex not in graph");
        removed[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) newid[static_cast<std::size_t>(v)] = n++;

    std::map<int, int> counter;
    std::vector<Edge> edges;
    for (const auto& ed : g.edges()) {
        const bool ra = removed[static_cast<std::size_t>(ed.a)];
        const bool rb = removed[static_cast<std::size_t>(ed.b)];
        if (ra && rb) continue;
        if (!ra && !rb) {
            edges.push_back(Edge::inner(newid[static_cast<std::size_t>(ed.a)], newid[static_cast<std::size_t>(ed.b)]));
            continue;
        }
        const int gone = ra ? ed.a : ed.b;
        const int kept = ra ? ed.b : ed.a;
        const int k = counter[gone]++;
        edges.push_back(Edge::free(newid[static_cast<std::size_t>(kept)], "x" + std::to_string(gone) + ":" + std::to_string(k)));
    }
    return Multipole(n, std::move(edges));
}

Graph close_with_edge(const Dipole& d) {
    require_two_two(d, "close_with_edge");
    const int u = d.vertex_count();
    const int v = u + 1;
    std::vector<Edge> edges;
    for (int e = 0; e < d.base().edge_count(); ++e) {
        const auto& ed = d.base().edge(e);
        if (!ed.dangling()) {
            edges.push_back(ed);
            continue;
        }
        const bool in = std::find(d.input().begin(), d.input().end(), ed.label) != d.input().end();
        edges.push_back(Edge::inner(ed.a, in ? u : v));
    }
    edges.push_back(Edge::inner(u, v));
    return Graph(d.vertex_count() + 2, std::move(edges));
}

Multipole relabel_dangling(const Multipole& m, std::span<const std::pair<std::string, std::string>> renames) {
    std::vector<Edge> edges = m.edges();
    for (auto& ed : edges) {
        if (!ed.dangling()) continue;
        for (const auto& [from, to] : renames) {
            if (ed.label == from) {
                ed.label = to;
                break;
            }
        }
    }
    return Multipole(m.vertex_count(), std::move(edges));
}

Dipole make_dipole(const Multipole& m, std::span<const std::string> input, std::span<const std::string> output) {
    if (input.size() != output.size()) throw bad("connector sizes differ");
    std::vector<std::pair<std::string, std::string>> renames;
    std::vector<std::string> in, out;
    auto stage = [&](std::span<const std::string> labels, Side side, std::vector<std::string>& conn) {
        for (const auto& l : labels) {
            conn.push_back(connector_label(side, static_cast<int>(conn.size())));
            renames.emplace_back(l, "\x01" + conn.back());
        }
    };
    // Rename through temporary names so an old label may equal a new one.
    stage(input, Side::input, in);
    stage(output, Side::output, out);
    auto staged = relabel_dangling(m, renames);
    std::vector<std::pair<std::string, std::string>> finals;
    for (const auto& [from, to] : renames) finals.emplace_back(to, to.substr(1));
    return Dipole(relabel_dangling(staged, finals), std::move(in), std::move(out));
}

Dipole pass_through_dipole() {
    std::vector<Edge> edges{Edge::free(0, "in:0"), Edge::free(0, "in:1"), Edge::inner(0, 1),
                            Edge::free(1, "out:0"), Edge::free(1, "out:1")};
    return Dipole(Multipole(2, std::move(edges)), {"in:0", "in:1"}, {"out:0", "out:1"});
}

}  // namespace snark
