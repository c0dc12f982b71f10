#include "snark/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace snark {

namespace {

// Vertex-coloured multigraph: adjacency lists of (neighbour, multiplicity).
struct Coloured {
    int n = 0;
    std::vector<int> colour;
    std::vector<std::vector<std::pair<int, int>>> adj;
};

Coloured lift(const Multipole& m, const std::vector<int>& free_colour) {
    Coloured c;
    c.n = m.vertex_count() + m.dangling_count();
    c.colour.assign(c.n, 0);
    std::vector<std::map<int, int>> mult(c.n);
    int pendant = m.vertex_count();
    int di = 0;
    for (const auto& ed : m.edges()) {
        int b = ed.b;
        if (ed.dangling()) {
            b = pendant++;
            c.colour[b] = 1 + free_colour[di++];
        }
        ++mult[ed.a][b];
        ++mult[b][ed.a];
    }
    c.adj.resize(c.n);
    for (int v = 0; v < c.n; ++v)
        for (auto [w, k] : mult[v]) c.adj[v].emplace_back(w, k);
    return c;
}

// Refines `cell` (colour per vertex, dense ranks) to a stable partition. Ranks
// are assigned by sorting signatures, which keeps the result label-free.
void refine(const Coloured& g, std::vector<int>& cell) {
    int classes = static_cast<int>(std::set<int>(cell.begin(), cell.end()).size());
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s{cell[v]};
            std::vector<std::pair<int, int>> nb;
            for (auto [w, k] : g.adj[v]) nb.emplace_back(cell[w], k);
            std::sort(nb.begin(), nb.end());
            for (auto [c, k] : nb) {
                s.push_back(c);
                s.push_back(k);
            }
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<int>> keys;
        keys.reserve(g.n);
        for (auto& [s, v] : sig) keys.push_back(s);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(g.n);
        for (auto& [s, v] : sig) next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
        const int now = static_cast<int>(keys.size());
        cell = std::move(next);
        if (now == classes) return;
        classes = now;
    }
}

CanonicalForm certificate(const Coloured& g, const std::vector<int>& cell) {
    // cell is discrete here: it is the canonical position of each vertex.
    CanonicalForm f;
    f.vertices = g.n;
    f.colours.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) f.colours[cell[v]] = g.colour[v];
    for (int v = 0; v < g.n; ++v)
        for (auto [w, k] : g.adj[v]) {
            const int a = cell[v], b = cell[w];
            if (a <= b) f.edges.push_back({a, b, k});
        }
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

void search(const Coloured& g, std::vector<int> cell, std::optional<CanonicalForm>& best) {
    refine(g, cell);
    std::vector<int> size(g.n, 0);
    for (int c : cell) ++size[c];
    int target = -1;
    for (int c = 0; c < g.n; ++c)
        if (size[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        auto f = certificate(g, cell);
        if (!best || f < *best) best = std::move(f);
        return;
    }
    for (int v = 0; v < g.n; ++v) {
        if (cell[v] != target) continue;
        // Split v off in front of its cell; doubling keeps ranks ordered.
        std::vector<int> next(g.n);
        for (int w = 0; w < g.n; ++w) next[w] = 2 * cell[w] + ((cell[w] == target && w != v) ? 1 : 0);
        search(g, std::move(next), best);
    }
}

CanonicalForm canonical(const Coloured& g) {
    std::vector<int> keys(g.colour);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> cell(g.n);
    for (int v = 0; v < g.n; ++v) cell[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), g.colour[v]) - keys.begin());
    std::optional<CanonicalForm> best;
    search(g, std::move(cell), best);
    if (!best) best = CanonicalForm{};
    return *best;
}

}  // namespace

CanonicalForm canonical_form(const Multipole& m) {
    return canonical(lift(m, std::vector<int>(m.dangling_count(), 0)));
}

CanonicalForm canonical_form(const Dipole& d) {
    const auto& m = d.base();
    std::vector<int> colour(m.dangling_count(), 0);
    const auto& dang = m.dangling_edges();
    for (int i = 0; i < d.arity(); ++i) {
        colour[std::find(dang.begin(), dang.end(), d.input_edge(i)) - dang.begin()] = i;
        colour[std::find(dang.begin(), dang.end(), d.output_edge(i)) - dang.begin()] = d.arity() + i;
    }
    return canonical(lift(m, colour));
}

bool isomorphic(const Multipole& a, const Multipole& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.dangling_count() != b.dangling_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const Dipole& a, const Dipole& b) {
    if (a.vertex_count() != b.vertex_count() || a.base().edge_count() != b.base().edge_count() || a.arity() != b.arity())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace snark
