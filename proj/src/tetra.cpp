#include "snark/tetra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace snark {

Point::Point(int bits) : bits_(bits) {
    if (bits < 1 || bits > 15) throw std::invalid_argument("point must be a nonzero 4-bit vector");
}

Point operator+(Point x, Point y) { return Point(x.bits() ^ y.bits()); }

std::vector<std::array<Point, 3>> pg32_lines() {
    std::vector<std::array<Point, 3>> out;
    for (int x = 1; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            const int z = x ^ y;
            if (z > y) out.push_back({Point(x), Point(y), Point(z)});
        }
    return out;
}

std::string_view to_string(Shape s) {
    switch (s) {
        case Shape::ls: return "ls";
        case Shape::hl: return "hl";
        case Shape::ang: return "ang";
        case Shape::alt: return "alt";
        case Shape::ax: return "ax";
        case Shape::dpt: return "dpt";
    }
    return "?";
}

Shape parse_shape(std::string_view token) {
    for (auto s : all_shapes)
        if (to_string(s) == token) return s;
    throw std::invalid_argument("unknown shape " + std::string(token));
}

Tetrahedron::Tetrahedron(std::array<Point, 4> corners) : corners_(corners) {
    // General position: the 15 nonempty XOR-combinations are distinct and nonzero.
    std::array<int, 16> seen{};
    for (int s = 1; s < 16; ++s) {
        int v = 0;
        for (int i = 0; i < 4; ++i)
            if (s >> i & 1) v ^= corners_[i].bits();
        if (v == 0 || seen[v]) throw std::invalid_argument("tetrahedron corners are not in general position");
        seen[v] = 1;
        coords_[v] = s;
    }
    index_.fill(-1);
    int k = 0;
    for (int i = 0; i < 4; ++i) points_[k++] = corners_[i];
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) points_[k++] = corners_[i] + corners_[j];
    for (int i = 0; i < 10; ++i) index_[points_[i].bits()] = i;
}

const Tetrahedron& Tetrahedron::canonical() {
    static const Tetrahedron t({Point(1), Point(2), Point(4), Point(8)});
    return t;
}

std::vector<std::array<Point, 3>> Tetrahedron::lines() const {
    std::vector<std::array<Point, 3>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back({corners_[i], corners_[j], corners_[i] + corners_[j]});
    return out;
}

int Tetrahedron::index(Point x) const {
    const int i = index_[x.bits()];
    if (i < 0) throw std::invalid_argument("point " + std::to_string(x.bits()) + " is not in the tetrahedron");
    return i;
}

int Tetrahedron::weight(Point x) const { return index(x) < 4 ? 1 : 2; }

int Tetrahedron::corner_coordinates(Point x) const { return coords_[x.bits()]; }

bool Tetrahedron::is_line(Point x, Point y, Point z) const {
    if (!contains(x) || !contains(y) || !contains(z)) return false;
    if ((x.bits() ^ y.bits() ^ z.bits()) != 0) return false;
    // XOR-zero triples inside T are its six lines and the four face triangles
    // made of midpoints; a line has exactly one midpoint.
    return weight(x) + weight(y) + weight(z) == 4;
}

Shape Tetrahedron::shape(Point x, Point y) const {
    const int wx = weight(x), wy = weight(y);
    if (x == y) return Shape::dpt;
    const int cx = corner_coordinates(x), cy = corner_coordinates(y);
    if (wx == 1 && wy == 1) return Shape::ls;
    if (wx == 2 && wy == 2) return (cx & cy) ? Shape::ang : Shape::ax;
    const int corner = wx == 1 ? cx : cy;
    const int mid = wx == 1 ? cy : cx;
    return (corner & mid) ? Shape::hl : Shape::alt;
}

Point Tetrahedron::permute(Point x, const std::array<int, 4>& perm) const {
    const int c = corner_coordinates(x);
    int v = 0;
    for (int i = 0; i < 4; ++i)
        if (c >> i & 1) v ^= corners_[perm[i]].bits();
    return Point(v);
}

const std::vector<std::array<int, 4>>& corner_permutations() {
    static const auto perms = [] {
        std::vector<std::array<int, 4>> out;
        std::array<int, 4> p{0, 1, 2, 3};
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

}  // namespace snark
