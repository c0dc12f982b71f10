#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace snark {

/// Constraint satisfaction over table domains: each variable picks one tuple
/// from its list, and ternary constraints relate one coordinate of each of
/// three variables. This is how a superposition is assembled from the
/// boundary relations of its superedges: variables are superedges, and every
/// lift vertex constrains the three dangling values that meet there.
class TableCsp {
  public:
    using Tuple = std::vector<int>;
    using Predicate = std::function<bool(int, int, int)>;

    /// Index of the new variable.
    int add_variable(std::vector<Tuple> tuples);
    /// (variable, coordinate) for each of the three places.
    void add_constraint(std::array<std::pair<int, int>, 3> scope, Predicate allowed);

    struct Result {
        /// Chosen tuple index per variable.
        std::optional<std::vector<int>> choice;
        std::uint64_t nodes = 0;
    };

    /// Generalised arc consistency on coordinate projections, branching on the
    /// smallest domain (or in variable order when static_order is set) and
    /// trying tuples in list order. With static_order the first solution is
    /// the lexicographically smallest choice vector.
    [[nodiscard]] Result solve(bool static_order = false) const;

    [[nodiscard]] int variable_count() const { return static_cast<int>(tuples_.size()); }
    [[nodiscard]] const Tuple& tuple(int var, int index) const {
        return tuples_.at(static_cast<std::size_t>(var)).at(static_cast<std::size_t>(index));
    }

  private:
    struct Constraint {
        std::array<std::pair<int, int>, 3> scope;
        Predicate allowed;
    };
    using Domains = std::vector<std::vector<int>>;  // live tuple indices per variable

    bool propagate(Domains& d) const;
    bool satisfied(const Domains& d) const;
    bool search(Domains d, bool static_order, std::vector<int>& out, std::uint64_t& nodes) const;

    std::vector<std::vector<Tuple>> tuples_;
    std::vector<Constraint> constraints_;
};

}  // namespace snark
