#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snark/multipole.hpp"
#include "snark/superposition.hpp"

namespace snark {

/// Malformed input. offset is a byte offset for graph6 and a 1-based line
/// number for multipole documents.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// A simple graph as stored in graph6: vertex count and edges (i, j), i < j,
/// ordered by j then i.
struct SimpleGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

/// One graph6 line (an optional ">>graph6<<" header and trailing newline are
/// accepted). Throws ParseError with the offending byte offset.
SimpleGraph parse_graph6(std::string_view line);
/// graph6 encoding without header or newline.
std::string write_graph6(const SimpleGraph& g);
/// Throws std::invalid_argument for multigraphs and multipoles.
std::string write_graph6(const Graph& g);
/// Throws std::invalid_argument unless every vertex has degree 3.
Graph to_cubic_graph(const SimpleGraph& g);

/// Line-oriented text formats. A multipole block is
///
///     multipole <vertices> <edges>
///     e <end> <end>            (one line per edge, in edge order)
///     input <label>...         (dipoles only)
///     output <label>...
///     end
///
/// where an end is v<id> or d:<label>. A plan is
///
///     plan <library size>
///     base
///     <multipole block>
///     superedge <index>
///     <dipole block>           (one per library entry)
///     attach <base edge> <superedge> <in lifts (2)> <out lifts (2)>
///     end
///
/// Blank lines and lines starting with # are ignored.
std::string write_multipole(const Multipole& m);
std::string write_dipole(const Dipole& d);
std::string write_plan(const SuperpositionPlan& plan);
Multipole parse_multipole(std::string_view text);
Dipole parse_dipole(std::string_view text);
SuperpositionPlan parse_plan(std::string_view text);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

/// A builtin name (petersen, k4, k33, theta, prism, cube), a file holding a
/// graph6 line, or a file holding a multipole document.
Graph load_graph(const std::string& spec);
/// A builtin (decollineator, q-dipole, superedge, pass-through) or a dipole file.
Dipole load_dipole(const std::string& spec);
/// A builtin graph name (canonical basic plan on it) or a plan file.
SuperpositionPlan load_plan(const std::string& spec);

}  // namespace snark
