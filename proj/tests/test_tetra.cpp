#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "snark/graphs.hpp"
#include "snark/multipole.hpp"
#include "snark/parallel.hpp"
#include "snark/random_graphs.hpp"
#include "snark/tetra.hpp"
#include "snark/tetra_flow.hpp"

using namespace snark;

namespace {

// Line test straight from the definition: {c_i, c_j, c_i + c_j} for i < j.
bool is_line_by_definition(const Tetrahedron& t, Point x, Point y, Point z) {
    std::set<int> want{x.bits(), y.bits(), z.bits()};
    if (want.size() != 3) return false;
    const auto& c = t.corners();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (want == std::set<int>{c[i].bits(), c[j].bits(), (c[i] + c[j]).bits()}) return true;
    return false;
}

// Counts T-flows by trying all assignments edge by edge, rejecting a vertex
// once its last edge is set; test-only oracle.
std::uint64_t count_by_brute_force(const Multipole& m, const Tetrahedron& t) {
    std::vector<int> value(m.edge_count(), 0);
    std::vector<int> last(m.vertex_count(), 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
        const auto& inc = m.incident(v);
        last[v] = *std::max_element(inc.begin(), inc.end());
    }
    std::vector<char> line(1000);
    for (int x = 0; x < 10; ++x)
        for (int y = 0; y < 10; ++y)
            for (int z = 0; z < 10; ++z)
                line[100 * x + 10 * y + z] = is_line_by_definition(t, t.point(x), t.point(y), t.point(z));
    std::uint64_t count = 0;
    std::function<void(int)> go = [&](int e) {
        if (e == m.edge_count()) {
            ++count;
            return;
        }
        for (int x = 0; x < 10; ++x) {
            value[e] = x;
            bool ok = true;
            for (int v : {m.edge(e).a, m.edge(e).b}) {
                if (v < 0 || last[v] != e) continue;
                const auto& inc = m.incident(v);
                ok = ok && line[100 * value[inc[0]] + 10 * value[inc[1]] + value[inc[2]]];
            }
            if (ok) go(e + 1);
        }
    };
    go(0);
    return count;
}

Shape shape_by_definition(const Tetrahedron& t, Point x, Point y) {
    if (x == y) return Shape::dpt;
    const int wx = t.weight(x), wy = t.weight(y);
    const int cx = t.corner_coordinates(x), cy = t.corner_coordinates(y);
    if (wx == 1 && wy == 1) return Shape::ls;
    if (wx == 2 && wy == 2) return (cx & cy) ? Shape::ang : Shape::ax;
    const int corner = wx == 1 ? cx : cy;
    const int mid = wx == 1 ? cy : cx;
    return (corner & mid) ? Shape::hl : Shape::alt;
}

}  // namespace

TEST_CASE("points of PG(3,2)") {
    CHECK_THROWS(Point(0));
    CHECK_THROWS(Point(16));
    CHECK((Point(3) + Point(5)).bits() == 6);
    CHECK_THROWS(Point(3) + Point(3));
    const auto lines = pg32_lines();
    CHECK(lines.size() == 35);
    std::map<int, int> on;
    for (const auto& l : lines) {
        CHECK((l[0].bits() ^ l[1].bits() ^ l[2].bits()) == 0);
        for (auto p : l) ++on[p.bits()];
    }
    CHECK(on.size() == 15);
    for (auto [p, k] : on) CHECK(k == 7);
}

TEST_CASE("tetrahedron structure") {
    const auto& t = Tetrahedron::canonical();
    CHECK(t.points().size() == 10);
    CHECK(t.lines().size() == 6);
    for (const auto& l : t.lines()) {
        int mids = 0;
        for (auto p : l) mids += t.weight(p) == 2;
        CHECK(mids == 1);
    }
    CHECK_FALSE(t.contains(Point(15)));
    CHECK_FALSE(t.contains(Point(7)));
    CHECK_THROWS(t.weight(Point(15)));
    CHECK_THROWS(Tetrahedron({Point(1), Point(2), Point(3), Point(8)}));
    // face triangles sum to zero but are not lines
    CHECK_FALSE(t.is_line(Point(3), Point(5), Point(6)));
    for (int x = 0; x < 10; ++x)
        for (int y = 0; y < 10; ++y)
            for (int z = 0; z < 10; ++z)
                REQUIRE(t.is_line(t.point(x), t.point(y), t.point(z)) ==
                        is_line_by_definition(t, t.point(x), t.point(y), t.point(z)));
}

TEST_CASE("a non-canonical tetrahedron") {
    const Tetrahedron t({Point(3), Point(5), Point(9), Point(8)});
    CHECK(t.lines().size() == 6);
    for (auto p : t.points()) CHECK(t.point(t.index(p)) == p);
    for (int i = 0; i < 4; ++i) CHECK(t.corner_coordinates(t.corners()[i]) == (1 << i));
}

TEST_CASE("shape classes") {
    const auto& t = Tetrahedron::canonical();
    std::map<Shape, int> size;
    for (int x = 0; x < 10; ++x)
        for (int y = x; y < 10; ++y) {
            const auto s = t.shape(t.point(x), t.point(y));
            REQUIRE(s == shape_by_definition(t, t.point(x), t.point(y)));
            ++size[s];
        }
    CHECK(size[Shape::ls] == 6);
    CHECK(size[Shape::hl] == 12);
    CHECK(size[Shape::ang] == 12);
    CHECK(size[Shape::alt] == 12);
    CHECK(size[Shape::ax] == 3);
    CHECK(size[Shape::dpt] == 10);
    for (auto s : all_shapes) CHECK(parse_shape(to_string(s)) == s);
    CHECK_THROWS(parse_shape("xx"));
}

TEST_CASE("corner permutations act on T") {
    const auto& t = Tetrahedron::canonical();
    CHECK(corner_permutations().size() == 24);
    for (const auto& perm : corner_permutations())
        for (int x = 0; x < 10; ++x)
            for (int y = x; y < 10; ++y) {
                const auto px = t.point(x), py = t.point(y);
                REQUIRE(t.shape(t.permute(px, perm), t.permute(py, perm)) == t.shape(px, py));
            }
}

TEST_CASE("T-flow counts agree with brute force") {
    const auto& t = Tetrahedron::canonical();
    CHECK(count_tetra_flows(theta(), t) == count_by_brute_force(theta(), t));
    CHECK(count_tetra_flows(k4(), t) == count_by_brute_force(k4(), t));
    CHECK(count_tetra_flows(theta(), t) > 0);
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto d = random_two_two_pole(rng, 6);
        REQUIRE(count_tetra_flows(d.base(), t) == count_by_brute_force(d.base(), t));
    }
}

TEST_CASE("Petersen has no T-flow, colourable graphs do") {
    CHECK_FALSE(find_tetra_flow(petersen()).flow);
    for (const auto& g : {k4(), k33(), prism(), cube(), theta()}) {
        const auto r = find_tetra_flow(g);
        REQUIRE(r.flow);
        CHECK(is_valid_tetra_flow(g, Tetrahedron::canonical(), *r.flow));
    }
}

TEST_CASE("T-flow search is thread-count independent") {
    const auto g = cube();
    set_max_threads(1);
    const auto a = find_tetra_flow(g);
    set_max_threads(4);
    const auto b = find_tetra_flow(g);
    set_max_threads(1);
    REQUIRE(a.flow);
    REQUIRE(b.flow);
    CHECK(*a.flow == *b.flow);
}

TEST_CASE("boundary conditions") {
    const auto& t = Tetrahedron::canonical();
    const auto d = sever_same_edge(petersen(), 0, 12);
    // every flow on the severed Petersen graph disagrees across one severed edge
    enumerate_tetra_flows(d.base(), t, {}, [&](const TetraFlow& f) {
        const bool same_in = f[d.input_edge(0)] == f[d.input_edge(1)];
        const bool same_out = f[d.output_edge(0)] == f[d.output_edge(1)];
        REQUIRE_FALSE((same_in && same_out));
        return true;
    });
    const BoundaryCondition fixed{{"in:0", Point(1)}, {"in:1", Point(1)}};
    std::uint64_t n = 0;
    enumerate_tetra_flows(d.base(), t, fixed, [&](const TetraFlow& f) {
        CHECK(f[d.input_edge(0)] == Point(1));
        ++n;
        return true;
    });
    CHECK(n == count_tetra_flows(d.base(), t, fixed));
    const std::array<std::pair<int, Point>, 1> ask{{{d.input_edge(0), Point(15)}}};
    CHECK_FALSE(tetra_flow_exists(d.base(), t, ask));
}

TEST_CASE("heavy dangling count") {
    const auto& t = Tetrahedron::canonical();
    const auto m = remove_vertices(k4(), std::array<int, 1>{0});
    const auto r = find_tetra_flow(m, t);
    REQUIRE(r.flow);
    // the three dangling edges meet as a line at the removed vertex: one midpoint
    CHECK(heavy_dangling_count(m, t, *r.flow) == 1);
    TetraFlow bad(m.edge_count(), Point(1));
    CHECK_THROWS(heavy_dangling_count(m, t, bad));
}
