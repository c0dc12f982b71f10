#include "snark/tetra_flow.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "snark/parallel.hpp"

namespace snark {

const VertexRule& tetra_rule(const Tetrahedron& t) {
    static std::mutex lock;
    static std::map<std::array<int, 4>, std::unique_ptr<VertexRule>> cache;
    const std::array<int, 4> key{t.corners()[0].bits(), t.corners()[1].bits(), t.corners()[2].bits(), t.corners()[3].bits()};
    std::lock_guard guard(lock);
    auto& slot = cache[key];
    if (!slot)
        slot = std::make_unique<VertexRule>(10, [&t](int x, int y, int z) { return t.is_line(t.point(x), t.point(y), t.point(z)); });
    return *slot;
}

namespace {

TetraFlow to_points(const Tetrahedron& t, const std::vector<int>& idx) {
    TetraFlow f;
    f.reserve(idx.size());
    for (int i : idx) f.push_back(t.point(i));
    return f;
}

}  // namespace

TetraFlowResult find_tetra_flow(const Multipole& m, const Tetrahedron& t) {
    const auto& rule = tetra_rule(t);
    TetraFlowResult out;
    if (m.vertex_count() == 0) {
        EdgeSearch s(m, rule);
        if (auto f = s.first()) out.flow = to_points(t, *f);
        out.stats = s.stats();
        return out;
    }
    // Vertex 0 gets {c0, c1, c0+c1}; slot `mid` holds the midpoint.
    std::vector<SearchStats> stats(3);
    auto hit = parallel_find_first<std::vector<int>>(3, [&](std::size_t mid) -> std::optional<std::vector<int>> {
        EdgeSearch s(m, rule);
        const auto& inc = m.incident(0);
        int corner = 0;
        bool ok = true;
        for (std::size_t slot = 0; slot < 3 && ok; ++slot) {
            const int value = slot == mid ? 4 : corner++;
            ok = s.restrict(inc[slot], Mask{1} << value);
        }
        std::optional<std::vector<int>> r;
        if (ok) r = s.first();
        stats[mid] = s.stats();
        return r;
    });
    for (const auto& s : stats) {
        out.stats.nodes += s.nodes;
        out.stats.solutions += s.solutions;
    }
    if (hit) out.flow = to_points(t, hit->second);
    return out;
}

SearchStats enumerate_tetra_flows(const Multipole& m, const Tetrahedron& t, const BoundaryCondition& boundary,
                                  const std::function<bool(const TetraFlow&)>& visit) {
    EdgeSearch s(m, tetra_rule(t));
    bool ok = true;
    for (const auto& [label, p] : boundary) {
        const int e = m.dangling_edge(label);
        if (!t.contains(p)) throw std::invalid_argument("boundary point " + std::to_string(p.bits()) + " is not in T");
        ok = ok && s.restrict(e, Mask{1} << t.index(p));
    }
    if (ok) s.enumerate([&](const std::vector<int>& v) { return visit(to_points(t, v)); });
    return s.stats();
}

std::uint64_t count_tetra_flows(const Multipole& m, const Tetrahedron& t, const BoundaryCondition& boundary) {
    std::uint64_t n = 0;
    enumerate_tetra_flows(m, t, boundary, [&](const TetraFlow&) {
        ++n;
        return true;
    });
    return n;
}

bool tetra_flow_exists(const Multipole& m, const Tetrahedron& t, std::span<const std::pair<int, Point>> fixed) {
    EdgeSearch s(m, tetra_rule(t));
    for (const auto& [e, p] : fixed) {
        if (!t.contains(p) || !s.restrict(e, Mask{1} << t.index(p))) return false;
    }
    return s.first().has_value();
}

bool is_valid_tetra_flow(const Multipole& m, const Tetrahedron& t, std::span<const Point> flow) {
    if (static_cast<int>(flow.size()) != m.edge_count()) return false;
    for (const auto& p : flow)
        if (!t.contains(p)) return false;
    for (int v = 0; v < m.vertex_count(); ++v) {
        const auto& inc = m.incident(v);
        if (!t.is_line(flow[inc[0]], flow[inc[1]], flow[inc[2]])) return false;
    }
    return true;
}

int heavy_dangling_count(const Multipole& m, const Tetrahedron& t, std::span<const Point> flow) {
    if (!is_valid_tetra_flow(m, t, flow)) throw std::invalid_argument("heavy_dangling_count: not a T-flow");
    int n = 0;
    for (int e : m.dangling_edges())
        if (t.weight(flow[e]) == 2) ++n;
    return n;
}

}  // namespace snark
