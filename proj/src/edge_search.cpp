#include "snark/edge_search.hpp"

#include <bit>
#include <stdexcept>

namespace snark {

VertexRule::VertexRule(int k, const std::function<bool(int, int, int)>& allowed, std::vector<int> negation)
    : k_(k), full_(k == 64 ? ~Mask{0} : ((Mask{1} << k) - 1)), negation_(std::move(negation)) {
    if (k < 1 || k > max_domain_size) throw std::invalid_argument("domain size out of range");
    if (!negation_.empty() && static_cast<int>(negation_.size()) != k)
        throw std::invalid_argument("negation map has wrong size");
    third_.assign(static_cast<std::size_t>(k * k), 0);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                if (allowed(x, y, z)) third_[static_cast<std::size_t>(x * k + y)] |= Mask{1} << z;
}

Mask VertexRule::negate_mask(Mask m) const {
    if (negation_.empty()) return m;
    Mask out = 0;
    while (m) {
        const int x = std::countr_zero(m);
        m &= m - 1;
        out |= Mask{1} << negation_[static_cast<std::size_t>(x)];
    }
    return out;
}

EdgeSearch::EdgeSearch(const Multipole& m, const VertexRule& rule)
    : m_(m), rule_(rule), dom_(static_cast<std::size_t>(m.edge_count()), rule.full()),
      queued_(static_cast<std::size_t>(m.vertex_count()), 0), flip_(static_cast<std::size_t>(m.vertex_count())) {
    for (int v = 0; v < m.vertex_count(); ++v)
        for (int s = 0; s < 3; ++s)
            flip_[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] =
                rule.oriented() && m.edge(m.incident(v)[static_cast<std::size_t>(s)]).a == v;
    for (int v = 0; v < m.vertex_count(); ++v) {
        queue_.push_back(v);
        queued_[static_cast<std::size_t>(v)] = 1;
    }
}

bool EdgeSearch::set_domain(int e, Mask mask) {
    auto& d = dom_[static_cast<std::size_t>(e)];
    if (mask == d) return true;
    trail_.emplace_back(e, d);
    d = mask;
    if (!mask) return false;
    const auto& ed = m_.edge(e);
    for (int v : {ed.a, ed.b}) {
        if (v >= 0 && !queued_[static_cast<std::size_t>(v)]) {
            queued_[static_cast<std::size_t>(v)] = 1;
            queue_.push_back(v);
        }
    }
    return true;
}

bool EdgeSearch::restrict(int edge, Mask allowed) {
    if (failed_) return false;
    if (!set_domain(edge, dom_[static_cast<std::size_t>(edge)] & allowed) || !propagate()) {
        failed_ = true;
        return false;
    }
    return true;
}

bool EdgeSearch::revise(int v) {
    const auto& inc = m_.incident(v);
    const auto& flip = flip_[static_cast<std::size_t>(v)];
    std::array<Mask, 3> d{};
    for (std::size_t s = 0; s < 3; ++s) {
        const Mask raw = dom_[static_cast<std::size_t>(inc[s])];
        d[s] = flip[s] ? rule_.negate_mask(raw) : raw;
    }
    std::array<Mask, 3> supported{};
    for (std::size_t s = 0; s < 3; ++s) {
        const std::size_t j = (s + 1) % 3;
        const std::size_t k = (s + 2) % 3;
        Mask acc = 0;
        Mask dj = d[j];
        while (dj && (acc & d[s]) != d[s]) {
            const int y = std::countr_zero(dj);
            dj &= dj - 1;
            Mask dk = d[k];
            while (dk) {
                const int z = std::countr_zero(dk);
                dk &= dk - 1;
                acc |= rule_.third(y, z);
            }
        }
        supported[s] = acc & d[s];
    }
    for (std::size_t s = 0; s < 3; ++s) {
        if (supported[s] == d[s]) continue;
        const Mask raw = flip[s] ? rule_.negate_mask(supported[s]) : supported[s];
        if (!set_domain(inc[s], raw)) return false;
    }
    return true;
}

bool EdgeSearch::propagate() {
    while (!queue_.empty()) {
        const int v = queue_.back();
        queue_.pop_back();
        queued_[static_cast<std::size_t>(v)] = 0;
        if (!revise(v)) {
            for (int w : queue_) queued_[static_cast<std::size_t>(w)] = 0;
            queue_.clear();
            return false;
        }
    }
    return true;
}

void EdgeSearch::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        const auto [e, old] = trail_.back();
        trail_.pop_back();
        dom_[static_cast<std::size_t>(e)] = old;
    }
}

bool EdgeSearch::search(const std::function<bool(const std::vector<int>&)>& visit, bool& stopped) {
    ++stats_.nodes;
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
        stopped = true;
        return false;
    }
    if (node_limit_ && stats_.nodes > node_limit_) {
        limit_reached_ = true;
        stopped = true;
        return false;
    }
    int best = -1;
    int best_size = 65;
    for (int e = 0; e < m_.edge_count(); ++e) {
        const int sz = std::popcount(dom_[static_cast<std::size_t>(e)]);
        if (sz > 1 && sz < best_size) {
            best = e;
            best_size = sz;
            if (sz == 2) break;
        }
    }
    if (best < 0) {
        ++stats_.solutions;
        std::vector<int> values(dom_.size());
        for (std::size_t e = 0; e < dom_.size(); ++e) values[e] = std::countr_zero(dom_[e]);
        if (!visit(values)) {
            stopped = true;
            return false;
        }
        return true;
    }
    Mask choices = dom_[static_cast<std::size_t>(best)];
    while (choices) {
        const int x = std::countr_zero(choices);
        choices &= choices - 1;
        const auto mark = trail_.size();
        if (set_domain(best, Mask{1} << x) && propagate()) {
            search(visit, stopped);
        }
        undo_to(mark);
        if (stopped) return false;
    }
    return true;
}

bool EdgeSearch::enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
    if (failed_ || !propagate()) {
        failed_ = true;
        ++stats_.nodes;
        return true;
    }
    bool stopped = false;
    search(visit, stopped);
    return !stopped;
}

std::optional<std::vector<int>> EdgeSearch::first() {
    std::optional<std::vector<int>> found;
    enumerate([&](const std::vector<int>& v) {
        found = v;
        return false;
    });
    return found;
}

}  // namespace snark
