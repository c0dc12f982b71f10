#include "snark/invariants.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "snark/edge_search.hpp"
#include "snark/frontier.hpp"
#include "snark/parallel.hpp"

namespace snark {

int girth(const Graph& g) {
    require_graph(g, "girth");
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(ed.a)] = 0;
        q.push(ed.a);
        while (!q.empty() && dist[static_cast<std::size_t>(ed.b)] < 0) {
            const int v = q.front();
            q.pop();
            if (dist[static_cast<std::size_t>(v)] + 1 >= best) break;
            for (int f : g.incident(v)) {
                if (f == e) continue;
                const int w = g.other_end(f, v);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[static_cast<std::size_t>(ed.b)] >= 0) best = std::min(best, dist[static_cast<std::size_t>(ed.b)] + 1);
    }
    if (best == std::numeric_limits<int>::max()) throw std::invalid_argument("girth: graph is acyclic");
    return best;
}

namespace {

const VertexRule& colouring_rule() {
    static const VertexRule rule(3, [](int x, int y, int z) { return x != y && y != z && x != z; });
    return rule;
}

std::optional<std::vector<int>> colouring_search(const Multipole& m, std::uint64_t node_limit, bool& gave_up) {
    EdgeSearch search(m, colouring_rule());
    search.set_node_limit(node_limit);
    // Colours are interchangeable, so the first vertex may be fixed.
    if (m.vertex_count() > 0) {
        const auto& inc = m.incident(0);
        for (int s = 0; s < 3; ++s)
            if (!search.restrict(inc[static_cast<std::size_t>(s)], Mask{1} << s)) return std::nullopt;
    }
    auto found = search.first();
    gave_up = search.limit_reached();
    return found;
}

}  // namespace

std::optional<std::vector<int>> three_edge_colouring(const Multipole& m) {
    // Backtracking finds colourings quickly but can take exponential time to
    // refute; a frontier sweep decides refutations for graphs of small cut width.
    bool gave_up = false;
    if (auto c = colouring_search(m, 200'000, gave_up)) return c;
    if (!gave_up) return std::nullopt;
    if (!assignment_exists(m, colouring_rule())) return std::nullopt;
    return colouring_search(m, 0, gave_up);
}

bool is_three_edge_colourable(const Multipole& m) { return three_edge_colouring(m).has_value(); }

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Whether deleting the edges flagged in `gone` leaves two components with cycles.
bool separates_cycles(const Graph& g, const std::vector<char>& gone) {
    DisjointSets ds(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (!gone[static_cast<std::size_t>(e)]) ds.unite(g.edge(e).a, g.edge(e).b);
    std::vector<int> verts(static_cast<std::size_t>(g.vertex_count()), 0), edges(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++verts[static_cast<std::size_t>(ds.find(v))];
    for (int e = 0; e < g.edge_count(); ++e)
        if (!gone[static_cast<std::size_t>(e)]) ++edges[static_cast<std::size_t>(ds.find(g.edge(e).a))];
    int cyclic = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (verts[static_cast<std::size_t>(v)] > 0 && edges[static_cast<std::size_t>(v)] >= verts[static_cast<std::size_t>(v)]) ++cyclic;
    return cyclic >= 2;
}

// Depth-first over subsets of exactly `size` edges with the first one fixed.
bool subsets_from(const Graph& g, int size, int start, std::vector<int>& chosen, std::vector<char>& gone) {
    if (static_cast<int>(chosen.size()) == size) return separates_cycles(g, gone);
    for (int e = start; e < g.edge_count(); ++e) {
        chosen.push_back(e);
        gone[static_cast<std::size_t>(e)] = 1;
        if (subsets_from(g, size, e + 1, chosen, gone)) return true;
        gone[static_cast<std::size_t>(e)] = 0;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> small_cycle_separating_cut(const Graph& g, int limit) {
    require_graph(g, "cyclic connectivity");
    // Every component of a cubic graph has a cycle, so disconnection is a 0-cut.
    if (limit > 0 && !is_connected(g)) return std::vector<int>{};
    for (int size = 1; size < limit; ++size) {
        auto hit = parallel_find_first<std::vector<int>>(static_cast<std::size_t>(g.edge_count()), [&](std::size_t first) -> std::optional<std::vector<int>> {
            std::vector<int> chosen{static_cast<int>(first)};
            std::vector<char> gone(static_cast<std::size_t>(g.edge_count()), 0);
            gone[first] = 1;
            if (subsets_from(g, size, static_cast<int>(first) + 1, chosen, gone)) return chosen;
            return std::nullopt;
        });
        if (hit) return hit->second;
    }
    return std::nullopt;
}

bool cyclic_connectivity_at_least(const Graph& g, int k) { return !small_cycle_separating_cut(g, k).has_value(); }

bool is_connected(const Multipole& m) {
    if (m.vertex_count() == 0) return true;
    DisjointSets ds(m.vertex_count());
    for (const auto& ed : m.edges())
        if (!ed.dangling()) ds.unite(ed.a, ed.b);
    const int root = ds.find(0);
    for (int v = 1; v < m.vertex_count(); ++v)
        if (ds.find(v) != root) return false;
    return true;
}

bool has_bridge(const Graph& g) {
    require_graph(g, "has_bridge");
    // Iterative lowpoint computation over edge indices, so parallel edges count.
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> tin(n, -1), low(n, 0);
    int timer = 0;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (tin[static_cast<std::size_t>(root)] >= 0) continue;
        struct Frame {
            int v, parent_edge, slot;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        tin[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            auto& fr = stack.back();
            if (fr.slot < 3) {
                const int e = g.incident(fr.v)[static_cast<std::size_t>(fr.slot++)];
                if (e == fr.parent_edge) continue;
                const int w = g.other_end(e, fr.v);
                if (tin[static_cast<std::size_t>(w)] >= 0) {
                    low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], tin[static_cast<std::size_t>(w)]);
                } else {
                    tin[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, e, 0});
                }
                continue;
            }
            const Frame done = fr;
            stack.pop_back();
            if (!stack.empty()) {
                auto& up = stack.back();
                low[static_cast<std::size_t>(up.v)] = std::min(low[static_cast<std::size_t>(up.v)], low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] > tin[static_cast<std::size_t>(up.v)]) return true;
            }
        }
    }
    return false;
}

}  // namespace snark
