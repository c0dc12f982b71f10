#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace snark {

/// An edge of a multipole. End `a` is always attached to a vertex; end `b` is
/// either a vertex or free. A free end makes the edge dangling and carries a
/// label. Dangling edges are stored with the attached end first, so oriented
/// values on a dangling edge always mean "out of the multipole".
struct Edge {
    int a = -1;
    int b = -1;
    std::string label;

    [[nodiscard]] bool dangling() const { return b < 0; }

    static Edge inner(int u, int v) { return Edge{u, v, {}}; }
    static Edge free(int v, std::string lbl) { return Edge{v, -1, std::move(lbl)}; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A cubic multipole: every vertex carries exactly three edge ends. Parallel
/// edges are allowed, loops are not. Edge identity is the position in edges().
class Multipole {
  public:
    Multipole() = default;
    Multipole(int vertex_count, std::vector<Edge> edges);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Edge indices at v in ascending order; a parallel pair shows up twice.
    [[nodiscard]] const std::array<int, 3>& incident(int v) const {
        return incidence_.at(static_cast<std::size_t>(v));
    }
    /// The vertex at the other end of e seen from v, or -1 for a free end.
    [[nodiscard]] int other_end(int e, int v) const;

    [[nodiscard]] const std::vector<int>& dangling_edges() const { return dangling_; }
    [[nodiscard]] int dangling_count() const { return static_cast<int>(dangling_.size()); }
    [[nodiscard]] std::optional<int> find_dangling(std::string_view label) const;
    /// Index of the dangling edge with this label; throws if absent.
    [[nodiscard]] int dangling_edge(std::string_view label) const;

    [[nodiscard]] bool is_graph() const { return dangling_.empty(); }

    friend bool operator==(const Multipole&, const Multipole&) = default;

  private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> incidence_;
    std::vector<int> dangling_;
};

/// A graph is a multipole without dangling edges.
using Graph = Multipole;

/// Throws std::invalid_argument unless m has no dangling edges.
void require_graph(const Multipole& m, std::string_view what);

/// A multipole whose dangling edges split into an ordered input and an ordered
/// output connector of equal size.
class Dipole {
  public:
    Dipole() = default;
    Dipole(Multipole base, std::vector<std::string> input, std::vector<std::string> output);

    [[nodiscard]] const Multipole& base() const { return base_; }
    [[nodiscard]] const std::vector<std::string>& input() const { return input_; }
    [[nodiscard]] const std::vector<std::string>& output() const { return output_; }
    [[nodiscard]] int arity() const { return static_cast<int>(input_.size()); }
    [[nodiscard]] int input_edge(int i) const { return input_edges_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] int output_edge(int i) const { return output_edges_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] int vertex_count() const { return base_.vertex_count(); }

    friend bool operator==(const Dipole&, const Dipole&) = default;

  private:
    Multipole base_;
    std::vector<std::string> input_, output_;
    std::vector<int> input_edges_, output_edges_;
};

/// Throws unless d is a (2,2)-pole.
void require_two_two(const Dipole& d, std::string_view what);

/// Joins the free ends of dangling edges s and t. The new edge takes the
/// position of s, t is removed.
[[nodiscard]] Multipole junction(const Multipole& m, std::string_view s, std::string_view t);

/// Where an edge of a composite came from: part 0 or 1 and the edge index there.
/// Junction edges point at the output dangling edge of part 0.
struct EdgeOrigin {
    int part = 0;
    int edge = 0;
};

struct Composition {
    Dipole dipole;
    std::vector<EdgeOrigin> origin;
};

/// Joins the i-th output of first with the i-th input of second. Vertices of
/// second are numbered after those of first.
[[nodiscard]] Composition compose_with_map(const Dipole& first, const Dipole& second);
[[nodiscard]] Dipole compose(const Dipole& first, const Dipole& second);

enum class Side { input, output };

/// One severed edge: which connector receives the half at end a and at end b.
struct EdgeCut {
    int edge = 0;
    Side end_a = Side::input;
    Side end_b = Side::output;
};

/// Severs the listed edges of a graph. Connector order is the order in which
/// halves are listed (cut order, end a before end b); labels are in:i / out:i.
/// The half at end a keeps the edge position, halves at end b are appended.
[[nodiscard]] Dipole sever(const Graph& g, std::span<const EdgeCut> cuts);

/// Severs e and f; both halves of e form the input, both halves of f the output.
[[nodiscard]] Dipole sever_same_edge(const Graph& g, int input_edge, int output_edge);

/// Deletes the vertices in vs. Edges with one deleted end become dangling with
/// label "x<deleted vertex>:<k>", k counting that vertex's edges in edge order.
/// Surviving vertices are renumbered in increasing order.
[[nodiscard]] Multipole remove_vertices(const Graph& g, std::span<const int> vs);

/// Adds two adjacent vertices, the first joined to the input connector and the
/// second to the output connector.
[[nodiscard]] Graph close_with_edge(const Dipole& d);

/// Relabels dangling edges; labels missing from the map are kept.
[[nodiscard]] Multipole relabel_dangling(const Multipole& m,
                                         std::span<const std::pair<std::string, std::string>> renames);

/// Dipole with connectors taken from the given labels, renamed to in:i / out:i.
[[nodiscard]] Dipole make_dipole(const Multipole& m, std::span<const std::string> input,
                                 std::span<const std::string> output);

/// The (2,2)-pole made of two adjacent vertices: the first carries both input
/// dangling edges, the second both outputs.
[[nodiscard]] Dipole pass_through_dipole();

}  // namespace snark
