#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

using Mask = std::uint64_t;

inline constexpr int max_domain_size = 64;

/// A symmetric ternary relation on values 0..k-1, imposed on the three edge
/// ends at every vertex. With a negation map, an edge end at the tail (end a)
/// sees the negated value, which turns oriented flow conservation into a
/// symmetric relation on inflows.
class VertexRule {
  public:
    VertexRule(int k, const std::function<bool(int, int, int)>& allowed,
               std::vector<int> negation = {});

    [[nodiscard]] int size() const { return k_; }
    [[nodiscard]] Mask full() const { return full_; }
    [[nodiscard]] bool oriented() const { return !negation_.empty(); }
    /// Values z such that (x, y, z) is allowed.
    [[nodiscard]] Mask third(int x, int y) const { return third_[static_cast<std::size_t>(x * k_ + y)]; }
    [[nodiscard]] int negate(int x) const { return negation_.empty() ? x : negation_[static_cast<std::size_t>(x)]; }
    [[nodiscard]] Mask negate_mask(Mask m) const;

  private:
    int k_;
    Mask full_;
    std::vector<Mask> third_;
    std::vector<int> negation_;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
};

/// Depth-first search for edge assignments satisfying a VertexRule at every
/// vertex. Each edge has a domain mask; propagation keeps every vertex
/// constraint generalised-arc-consistent, which includes forcing the third
/// value once two are known. Branching picks the smallest domain (ties by edge
/// index) and tries values in increasing order, so solution order is fixed.
class EdgeSearch {
  public:
    EdgeSearch(const Multipole& m, const VertexRule& rule);

    /// Restricts an edge before searching. Returns false if the domain empties.
    bool restrict(int edge, Mask allowed);

    /// Calls visit for each solution until it returns false. Returns false if
    /// stopped early (by visit or by the cancel flag).
    bool enumerate(const std::function<bool(const std::vector<int>&)>& visit);

    /// First solution in search order, if any.
    std::optional<std::vector<int>> first();

    [[nodiscard]] const SearchStats& stats() const { return stats_; }
    void set_cancel_flag(const std::atomic<bool>* flag) { cancel_ = flag; }
    /// Stops the search after this many nodes; limit_reached() reports it.
    void set_node_limit(std::uint64_t nodes) { node_limit_ = nodes; }
    [[nodiscard]] bool limit_reached() const { return limit_reached_; }

  private:
    bool propagate();
    bool revise(int v);
    bool set_domain(int e, Mask m);
    void undo_to(std::size_t mark);
    bool search(const std::function<bool(const std::vector<int>&)>& visit, bool& stopped);

    const Multipole& m_;
    const VertexRule& rule_;
    std::vector<Mask> dom_;
    std::vector<std::pair<int, Mask>> trail_;
    std::vector<int> queue_;
    std::vector<char> queued_;
    // Per vertex and slot: whether the end is a tail under an oriented rule.
    std::vector<std::array<bool, 3>> flip_;
    bool failed_ = false;
    SearchStats stats_;
    const std::atomic<bool>* cancel_ = nullptr;
    std::uint64_t node_limit_ = 0;
    bool limit_reached_ = false;
};

}  // namespace snark
