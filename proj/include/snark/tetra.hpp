#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace snark {

/// A point of PG(3,2): a nonzero vector of GF(2)^4 stored as a bitmask 1..15.
/// Addition is XOR.
class Point {
  public:
    constexpr Point() = default;
    explicit Point(int bits);

    [[nodiscard]] constexpr int bits() const { return bits_; }
    friend constexpr auto operator<=>(Point, Point) = default;

  private:
    int bits_ = 1;
};

/// Sum of two distinct points (equal points would sum to zero).
Point operator+(Point x, Point y);

/// All 35 lines of PG(3,2): triples {x, y, x+y}, each listed in ascending order.
std::vector<std::array<Point, 3>> pg32_lines();

enum class Shape { ls, hl, ang, alt, ax, dpt };

inline constexpr std::array<Shape, 6> all_shapes{Shape::ls, Shape::hl, Shape::ang, Shape::alt, Shape::ax, Shape::dpt};

std::string_view to_string(Shape s);
Shape parse_shape(std::string_view token);

/// Line segment or half-line.
constexpr bool is_collinear(Shape s) { return s == Shape::ls || s == Shape::hl; }

/// Tetrahedron spanned by four corners in general position: corners plus the
/// six pairwise sums, and the six lines {c_i, c_j, c_i + c_j}.
///
/// Points of T are also addressed by a dense index 0..9: corners first in
/// corner order, then midpoints c_i+c_j for (i,j) = 01,02,03,12,13,23.
class Tetrahedron {
  public:
    explicit Tetrahedron(std::array<Point, 4> corners);
    /// Corners 1, 2, 4, 8.
    static const Tetrahedron& canonical();

    [[nodiscard]] const std::array<Point, 4>& corners() const { return corners_; }
    [[nodiscard]] const std::array<Point, 10>& points() const { return points_; }
    [[nodiscard]] std::vector<std::array<Point, 3>> lines() const;

    [[nodiscard]] bool contains(Point x) const { return index_[x.bits()] >= 0; }
    /// Dense index of x; throws if x is not in T.
    [[nodiscard]] int index(Point x) const;
    [[nodiscard]] Point point(int i) const { return points_.at(i); }

    /// 1 for corners, 2 for midpoints; throws outside T.
    [[nodiscard]] int weight(Point x) const;
    /// Coordinates of x in the basis of the corners, as a bitmask (bit i = corner i).
    [[nodiscard]] int corner_coordinates(Point x) const;

    /// Whether three points form one of the six lines of T.
    [[nodiscard]] bool is_line(Point x, Point y, Point z) const;
    /// Shape of the unordered pair {x, y}; throws outside T.
    [[nodiscard]] Shape shape(Point x, Point y) const;

    /// Image of x under the linear map permuting corners: corner i -> corner perm[i].
    [[nodiscard]] Point permute(Point x, const std::array<int, 4>& perm) const;

  private:
    std::array<Point, 4> corners_;
    std::array<Point, 10> points_;
    std::array<int, 16> index_{};
    std::array<int, 16> coords_{};
};

/// The 24 permutations of {0,1,2,3} in lexicographic order.
const std::vector<std::array<int, 4>>& corner_permutations();

}  // namespace snark
