#include "snark/random_graphs.hpp"

#include <array>
#include <stdexcept>

namespace snark {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = Rng::max() - (Rng::max() % n);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

Graph random_cubic_multigraph(int n, Rng& rng) {
    if (n < 2 || n % 2) throw std::invalid_argument("random cubic graph needs an even order >= 2");
    for (;;) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        std::vector<Edge> edges;
        bool loop = false;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                loop = true;
                break;
            }
            edges.push_back(Edge::inner(std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])));
        }
        if (!loop) return Graph(n, std::move(edges));
    }
}

Dipole random_two_two_pole(Rng& rng, int max_vertices) {
    const int orders = max_vertices / 2;
    const int n = 2 * (1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(orders))));
    const Graph g = random_cubic_multigraph(n, rng);
    const int e = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.edge_count())));
    int f = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.edge_count() - 1)));
    if (f >= e) ++f;
    std::array<EdgeCut, 2> cuts{};
    if (uniform_below(rng, 2) == 0) {
        cuts = {EdgeCut{e, Side::input, Side::input}, EdgeCut{f, Side::output, Side::output}};
    } else {
        cuts = {EdgeCut{e, Side::input, Side::output}, EdgeCut{f, Side::input, Side::output}};
    }
    return sever(g, cuts);
}

}  // namespace snark
