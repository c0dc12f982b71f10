#include "snark/census.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "snark/invariants.hpp"
#include "snark/isomorphism.hpp"

namespace snark {

std::vector<Graph> connected_cubic_graphs(int n) {
    if (n < 4 || n % 2) throw std::invalid_argument("connected_cubic_graphs: n must be even and at least 4");
    // Vertices are numbered in breadth-first order: vertex v's neighbours are
    // filled in increasing order, and a neighbour that has not been seen yet
    // is always the next fresh label. Every graph has such a labelling.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::map<CanonicalForm, Graph> seen;
    int fresh = 1;

    auto emit = [&] {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (v < w) edges.push_back(Edge::inner(v, w));
        Graph g(n, std::move(edges));
        seen.try_emplace(canonical_form(g), std::move(g));
    };

    std::function<void(int)> fill = [&](int v) {
        if (v == n) {
            emit();
            return;
        }
        auto& av = adj[static_cast<std::size_t>(v)];
        if (av.size() == 3) {
            fill(v + 1);
            return;
        }
        if (v >= fresh) return;  // v was never reached: disconnected
        const int floor = std::max(v + 1, av.empty() ? 0 : av.back() + 1);
        for (int w = floor; w <= fresh && w < n; ++w) {
            auto& aw = adj[static_cast<std::size_t>(w)];
            if (aw.size() == 3) continue;
            const bool is_fresh = w == fresh;
            av.push_back(w);
            aw.push_back(v);
            if (is_fresh) ++fresh;
            fill(v);
            if (is_fresh) --fresh;
            av.pop_back();
            aw.pop_back();
        }
    };
    fill(0);

    std::vector<Graph> out;
    for (auto& [form, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> bridgeless_cubic_census(int max_vertices) {
    std::vector<Graph> out;
    for (int n = 4; n <= max_vertices; n += 2)
        for (auto& g : connected_cubic_graphs(n))
            if (!has_bridge(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace snark
