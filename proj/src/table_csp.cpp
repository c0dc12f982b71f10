#include "snark/table_csp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace snark {

int TableCsp::add_variable(std::vector<Tuple> tuples) {
    tuples_.push_back(std::move(tuples));
    return static_cast<int>(tuples_.size()) - 1;
}

void TableCsp::add_constraint(std::array<std::pair<int, int>, 3> scope, Predicate allowed) {
    for (auto [v, c] : scope) {
        if (v < 0 || v >= variable_count()) throw std::invalid_argument("constraint on unknown variable");
        for (const auto& t : tuples_[static_cast<std::size_t>(v)])
            if (c < 0 || c >= static_cast<int>(t.size())) throw std::invalid_argument("constraint coordinate out of range");
    }
    constraints_.push_back({scope, std::move(allowed)});
}

bool TableCsp::propagate(Domains& d) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& con : constraints_) {
            std::array<std::vector<int>, 3> proj;
            for (std::size_t k = 0; k < 3; ++k) {
                const auto [v, c] = con.scope[k];
                std::set<int> vals;
                for (int i : d[static_cast<std::size_t>(v)]) vals.insert(tuple(v, i)[static_cast<std::size_t>(c)]);
                proj[k].assign(vals.begin(), vals.end());
            }
            for (std::size_t k = 0; k < 3; ++k) {
                const auto& pj = proj[(k + 1) % 3];
                const auto& pl = proj[(k + 2) % 3];
                std::set<int> supported;
                for (int x : proj[k]) {
                    bool ok = false;
                    for (int y : pj) {
                        for (int z : pl) {
                            std::array<int, 3> vals{};
                            vals[k] = x;
                            vals[(k + 1) % 3] = y;
                            vals[(k + 2) % 3] = z;
                            if (con.allowed(vals[0], vals[1], vals[2])) {
                                ok = true;
                                break;
                            }
                        }
                        if (ok) break;
                    }
                    if (ok) supported.insert(x);
                }
                if (supported.size() == proj[k].size()) continue;
                const auto [v, c] = con.scope[k];
                auto& dom = d[static_cast<std::size_t>(v)];
                std::erase_if(dom, [&](int i) { return !supported.contains(tuple(v, i)[static_cast<std::size_t>(c)]); });
                if (dom.empty()) return false;
                changed = true;
                proj[k].assign(supported.begin(), supported.end());
            }
        }
    }
    return true;
}

bool TableCsp::satisfied(const Domains& d) const {
    for (const auto& con : constraints_) {
        std::array<int, 3> vals{};
        for (std::size_t k = 0; k < 3; ++k) {
            const auto [v, c] = con.scope[k];
            vals[k] = tuple(v, d[static_cast<std::size_t>(v)].front())[static_cast<std::size_t>(c)];
        }
        if (!con.allowed(vals[0], vals[1], vals[2])) return false;
    }
    return true;
}

bool TableCsp::search(Domains d, bool static_order, std::vector<int>& out, std::uint64_t& nodes) const {
    ++nodes;
    if (!propagate(d)) return false;
    int pick = -1;
    for (int v = 0; v < variable_count(); ++v) {
        const auto size = d[static_cast<std::size_t>(v)].size();
        if (size < 2) continue;
        if (pick < 0 || (!static_order && size < d[static_cast<std::size_t>(pick)].size())) pick = v;
        if (static_order) break;
    }
    if (pick < 0) {
        // A variable can occur twice in a constraint, where projections are
        // only an over-approximation; check the full assignment.
        if (!satisfied(d)) return false;
        out.clear();
        for (const auto& dom : d) out.push_back(dom.front());
        return true;
    }
    const auto options = d[static_cast<std::size_t>(pick)];
    for (int i : options) {
        auto next = d;
        next[static_cast<std::size_t>(pick)] = {i};
        if (search(std::move(next), static_order, out, nodes)) return true;
    }
    return false;
}

TableCsp::Result TableCsp::solve(bool static_order) const {
    Domains d;
    for (const auto& ts : tuples_) {
        std::vector<int> all(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) all[i] = static_cast<int>(i);
        d.push_back(std::move(all));
    }
    Result r;
    std::vector<int> out;
    if (std::any_of(d.begin(), d.end(), [](const auto& dom) { return dom.empty(); })) {
        r.nodes = 1;
        return r;
    }
    if (search(std::move(d), static_order, out, r.nodes)) r.choice = std::move(out);
    return r;
}

}  // namespace snark
