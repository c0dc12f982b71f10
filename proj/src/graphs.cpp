#include "snark/graphs.hpp"

namespace snark {

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back(Edge::inner(u, v));
    return Graph(n, std::move(edges));
}

}  // namespace

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back(Edge::inner(i, (i + 1) % 5));
    for (int i = 0; i < 5; ++i) edges.push_back(Edge::inner(i, i + 5));
    for (int i = 0; i < 5; ++i) edges.push_back(Edge::inner(i + 5, (i + 2) % 5 + 5));
    return Graph(10, std::move(edges));
}

Graph k4() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k33() {
    return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Graph theta() { return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }

Graph prism() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

Graph cube() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
            if (!(v & bit)) edges.push_back(Edge::inner(v, v | bit));
    return Graph(8, std::move(edges));
}

std::optional<Graph> builtin_graph(std::string_view name) {
    if (name == "petersen") return petersen();
    if (name == "k4") return k4();
    if (name == "k33") return k33();
    if (name == "theta") return theta();
    if (name == "prism") return prism();
    if (name == "cube") return cube();
    return std::nullopt;
}

}  // namespace snark
