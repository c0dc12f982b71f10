#include "snark/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "snark/invariants.hpp"
#include "snark/parallel.hpp"

namespace snark {

namespace {

using EdgeSet = boost::dynamic_bitset<>;

EdgeSet to_set(const Graph& g, const PerfectMatching& m) {
    EdgeSet s(static_cast<std::size_t>(g.edge_count()));
    for (int e : m) s.set(static_cast<std::size_t>(e));
    return s;
}

// Depth-first cover search: take the lowest uncovered edge and branch over
// the matchings that contain it.
class CoverSearch {
  public:
    CoverSearch(const Graph& g, const std::vector<PerfectMatching>& matchings)
        : half_(static_cast<std::size_t>(g.vertex_count() / 2)), by_edge_(static_cast<std::size_t>(g.edge_count())) {
        for (const auto& m : matchings) sets_.push_back(to_set(g, m));
        for (std::size_t i = 0; i < matchings.size(); ++i)
            for (int e : matchings[i]) by_edge_[static_cast<std::size_t>(e)].push_back(static_cast<int>(i));
    }

    [[nodiscard]] const std::vector<int>& containing(int e) const { return by_edge_[static_cast<std::size_t>(e)]; }
    [[nodiscard]] const EdgeSet& set(int i) const { return sets_[static_cast<std::size_t>(i)]; }

    bool run(const EdgeSet& covered, int left, std::vector<int>& chosen, std::uint64_t& nodes) const {
        ++nodes;
        const auto uncovered = covered.size() - covered.count();
        if (uncovered == 0) return true;
        if (left == 0 || uncovered > static_cast<std::size_t>(left) * half_) return false;
        const auto e = (~covered).find_first();
        for (int m : by_edge_[e]) {
            chosen.push_back(m);
            if (run(covered | sets_[static_cast<std::size_t>(m)], left - 1, chosen, nodes)) return true;
            chosen.pop_back();
        }
        return false;
    }

  private:
    std::size_t half_;
    std::vector<EdgeSet> sets_;
    std::vector<std::vector<int>> by_edge_;
};

void require_cubic_graph_with_edges(const Graph& g, std::string_view what) {
    require_graph(g, what);
    if (g.edge_count() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g) {
    require_graph(g, "enumerate_perfect_matchings");
    const int n = g.vertex_count();
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    std::vector<int> current;
    std::vector<PerfectMatching> out;
    std::function<void(int)> go = [&](int v) {
        while (v < n && matched[static_cast<std::size_t>(v)]) ++v;
        if (v == n) {
            auto m = current;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        const auto& inc = g.incident(v);
        for (std::size_t s = 0; s < 3; ++s) {
            const int e = inc[s];
            const int w = g.other_end(e, v);
            if (matched[static_cast<std::size_t>(w)]) continue;
            matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(w)] = 1;
            current.push_back(e);
            go(v + 1);
            current.pop_back();
            matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(w)] = 0;
        }
    };
    go(0);
    return out;
}

bool is_perfect_matching(const Graph& g, std::span<const int> edges) {
    std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : edges) {
        if (e < 0 || e >= g.edge_count() || used[static_cast<std::size_t>(e)]) return false;
        used[static_cast<std::size_t>(e)] = 1;
        const auto& ed = g.edge(e);
        if (ed.dangling()) return false;
        ++hits[static_cast<std::size_t>(ed.a)];
        ++hits[static_cast<std::size_t>(ed.b)];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_cover(const Graph& g, const Cover& cover) {
    std::vector<char> hit(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& m : cover) {
        if (!is_perfect_matching(g, m)) return false;
        for (int e : m) hit[static_cast<std::size_t>(e)] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

PerfectMatchingIndex perfect_matching_index(const Graph& g, int cap) {
    require_cubic_graph_with_edges(g, "perfect_matching_index");
    if (cap < 3) throw std::invalid_argument("perfect_matching_index: cap must be at least 3");
    if (has_bridge(g)) throw std::invalid_argument("perfect_matching_index: graph has a bridge");

    const auto matchings = enumerate_perfect_matchings(g);
    const CoverSearch search(g, matchings);
    PerfectMatchingIndex result;
    result.cap = cap;
    result.matchings = matchings.size();

    // Every cover uses a matching through edge 0; those are the parallel branches.
    const auto& roots = search.containing(0);
    for (int k = 3; k <= cap; ++k) {
        std::vector<std::uint64_t> nodes(roots.size(), 0);
        auto hit = parallel_find_first<std::vector<int>>(roots.size(), [&](std::size_t i) -> std::optional<std::vector<int>> {
            std::vector<int> chosen{roots[i]};
            if (search.run(search.set(roots[i]), k - 1, chosen, nodes[i])) return chosen;
            return std::nullopt;
        });
        // Only branches up to the first success count, so the total does not
        // depend on how far other workers got.
        const std::size_t last = hit ? hit->first + 1 : roots.size();
        for (std::size_t i = 0; i < last; ++i) result.nodes += nodes[i];
        if (hit) {
            result.value = k;
            for (int m : hit->second) result.certificate.push_back(matchings[static_cast<std::size_t>(m)]);
            // Fewer than k matchings can cover E only if a smaller size succeeded.
            return result;
        }
    }
    return result;
}

TetraFlow cover_to_flow(const Graph& g, const Cover& cover, const Tetrahedron& t) {
    if (cover.size() != 4) throw std::invalid_argument("cover_to_flow: need exactly four matchings");
    if (!is_cover(g, cover)) throw std::invalid_argument("cover_to_flow: not a cover by perfect matchings");
    const auto& c = t.corners();
    const int all = c[0].bits() ^ c[1].bits() ^ c[2].bits() ^ c[3].bits();
    std::vector<int> outside(static_cast<std::size_t>(g.edge_count()), 0b1111);
    for (int i = 0; i < 4; ++i)
        for (int e : cover[static_cast<std::size_t>(i)]) outside[static_cast<std::size_t>(e)] &= ~(1 << i);
    // The linear map sending "missing only from matching i" to corner i sends
    // unit vector i to corner i plus the sum of all corners.
    TetraFlow flow;
    flow.reserve(outside.size());
    for (int a : outside) {
        int bits = 0;
        for (int i = 0; i < 4; ++i)
            if (a >> i & 1) bits ^= c[static_cast<std::size_t>(i)].bits() ^ all;
        if (bits == 0 || !t.contains(Point(bits))) throw std::logic_error("cover_to_flow: value outside the tetrahedron");
        flow.emplace_back(bits);
    }
    return flow;
}

Cover flow_to_cover(const Graph& g, std::span<const Point> flow, const Tetrahedron& t) {
    require_graph(g, "flow_to_cover");
    if (!is_valid_tetra_flow(g, t, flow)) throw std::invalid_argument("flow_to_cover: not a T-flow");
    Cover cover(4);
    for (int e = 0; e < g.edge_count(); ++e) {
        int b = t.corner_coordinates(flow[static_cast<std::size_t>(e)]);
        if (std::popcount(static_cast<unsigned>(b)) % 2) b ^= 0b1111;
        for (int i = 0; i < 4; ++i)
            if (!(b >> i & 1)) cover[static_cast<std::size_t>(i)].push_back(e);
    }
    if (!is_cover(g, cover)) throw std::logic_error("flow_to_cover: produced an invalid cover");
    return cover;
}

std::uint64_t count_ordered_four_covers(const Graph& g) {
    const auto matchings = enumerate_perfect_matchings(g);
    std::vector<EdgeSet> sets;
    for (const auto& m : matchings) sets.push_back(to_set(g, m));
    const std::size_t n = sets.size();
    auto per_first = parallel_map<std::uint64_t>(n, [&](std::size_t a) {
        std::uint64_t count = 0;
        for (std::size_t b = 0; b < n; ++b) {
            const auto ab = sets[a] | sets[b];
            for (std::size_t c = 0; c < n; ++c) {
                const auto abc = ab | sets[c];
                for (std::size_t d = 0; d < n; ++d)
                    if ((abc | sets[d]).all()) ++count;
            }
        }
        return count;
    });
    std::uint64_t total = 0;
    for (auto x : per_first) total += x;
    return total;
}

}  // namespace snark
