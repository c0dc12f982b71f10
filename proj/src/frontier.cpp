#include "snark/frontier.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "snark/parallel.hpp"

namespace snark {

namespace {

using Key = unsigned __int128;

struct Sweep {
    std::vector<int> order;
    int width = 0;
    long total = 0;
};

Sweep greedy_from(const Multipole& m, int start) {
    const int n = m.vertex_count();
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<int> into(static_cast<std::size_t>(n), 0);      // edge ends into the processed part
    std::vector<int> first_touch(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
    Sweep s;
    int cut = 0;
    int next = start;
    for (int step = 0; step < n; ++step) {
        const int v = next;
        done[static_cast<std::size_t>(v)] = 1;
        s.order.push_back(v);
        cut += 3 - 2 * into[static_cast<std::size_t>(v)];
        s.width = std::max(s.width, cut);
        s.total += cut;
        for (int e : m.incident(v)) {
            const int w = m.other_end(e, v);
            if (w < 0 || done[static_cast<std::size_t>(w)]) continue;
            ++into[static_cast<std::size_t>(w)];
            first_touch[static_cast<std::size_t>(w)] = std::min(first_touch[static_cast<std::size_t>(w)], step);
        }
        next = -1;
        for (int w = 0; w < n; ++w) {
            if (done[static_cast<std::size_t>(w)]) continue;
            if (next < 0) {
                next = w;
                continue;
            }
            const auto iw = into[static_cast<std::size_t>(w)], in = into[static_cast<std::size_t>(next)];
            if (iw > in || (iw == in && first_touch[static_cast<std::size_t>(w)] < first_touch[static_cast<std::size_t>(next)]))
                next = w;
        }
    }
    return s;
}

}  // namespace

std::vector<int> frontier_order(const Multipole& m) {
    if (m.vertex_count() == 0) return {};
    const auto sweeps = parallel_map<Sweep>(static_cast<std::size_t>(m.vertex_count()),
                                            [&](std::size_t v) { return greedy_from(m, static_cast<int>(v)); });
    const auto best = std::min_element(sweeps.begin(), sweeps.end(), [](const Sweep& a, const Sweep& b) {
        return std::pair(a.width, a.total) < std::pair(b.width, b.total);
    });
    return best->order;
}

int frontier_width(const Multipole& m, std::span<const int> order) {
    std::vector<char> done(static_cast<std::size_t>(m.vertex_count()), 0);
    int cut = 0, width = 0;
    for (int v : order) {
        for (int e : m.incident(v)) {
            const int w = m.other_end(e, v);
            cut += (w >= 0 && done[static_cast<std::size_t>(w)]) ? -1 : 1;
        }
        done[static_cast<std::size_t>(v)] = 1;
        width = std::max(width, cut);
    }
    return width;
}

FrontierResult boundary_assignments(const Multipole& m, const VertexRule& rule,
                                    std::span<const std::pair<int, Mask>> restrictions, std::size_t max_states) {
    const int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(rule.size() - 1))));
    const Key value_mask = (Key{1} << bits) - 1;
    std::vector<Mask> allowed(static_cast<std::size_t>(m.edge_count()), rule.full());
    for (auto [e, mask] : restrictions) allowed.at(static_cast<std::size_t>(e)) &= mask;

    const auto order = frontier_order(m);
    FrontierResult result;
    result.stats.width = frontier_width(m, order);
    if (result.stats.width * bits > 128) throw std::length_error("frontier too wide for state encoding");

    std::vector<char> done(static_cast<std::size_t>(m.vertex_count()), 0);
    std::vector<int> frontier;  // edge at each state position
    std::vector<Key> states{Key{0}};

    for (int v : order) {
        const auto& inc = m.incident(v);
        std::array<int, 3> pos{-1, -1, -1};  // state position of a closing slot
        std::array<bool, 3> flip{};
        std::array<Mask, 3> slot_allowed{};
        for (std::size_t s = 0; s < 3; ++s) {
            const int e = inc[s];
            const int w = m.other_end(e, v);
            flip[s] = rule.oriented() && m.edge(e).a == v;
            const Mask a = allowed[static_cast<std::size_t>(e)];
            slot_allowed[s] = flip[s] ? rule.negate_mask(a) : a;
            if (w >= 0 && done[static_cast<std::size_t>(w)]) {
                pos[s] = static_cast<int>(std::find(frontier.begin(), frontier.end(), e) - frontier.begin());
            }
        }
        // New frontier: kept positions in order, then this vertex's new edges.
        std::vector<int> next_frontier;
        std::vector<int> kept;
        for (int p = 0; p < static_cast<int>(frontier.size()); ++p)
            if (std::find(pos.begin(), pos.end(), p) == pos.end()) {
                kept.push_back(p);
                next_frontier.push_back(frontier[static_cast<std::size_t>(p)]);
            }
        std::array<int, 3> new_pos{-1, -1, -1};
        for (std::size_t s = 0; s < 3; ++s)
            if (pos[s] < 0) {
                new_pos[s] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(inc[s]);
            }

        // Order slots: closing first, then new ones.
        std::array<std::size_t, 3> slot_order{0, 1, 2};
        std::stable_sort(slot_order.begin(), slot_order.end(), [&](std::size_t a, std::size_t b) { return pos[a] >= 0 && pos[b] < 0; });

        const std::size_t chunk_count = std::max<std::size_t>(1, std::min<std::size_t>(states.size() / 4096 + 1, 64));
        auto produced = parallel_map<std::vector<Key>>(chunk_count, [&](std::size_t c) {
            std::vector<Key> out;
            const std::size_t lo = states.size() * c / chunk_count, hi = states.size() * (c + 1) / chunk_count;
            for (std::size_t i = lo; i < hi; ++i) {
                const Key st = states[i];
                Key base = 0;
                for (std::size_t k = 0; k < kept.size(); ++k)
                    base |= ((st >> (kept[k] * bits)) & value_mask) << (k * bits);
                std::array<int, 3> val{};
                for (std::size_t s = 0; s < 3; ++s)
                    if (pos[s] >= 0) {
                        const int raw = static_cast<int>((st >> (pos[s] * bits)) & value_mask);
                        val[s] = flip[s] ? rule.negate(raw) : raw;
                    }
                if (out.size() > max_states) throw std::length_error("frontier sweep exceeded the state limit");
                auto emit = [&](const std::array<int, 3>& x) {
                    Key k = base;
                    for (std::size_t s = 0; s < 3; ++s)
                        if (new_pos[s] >= 0) {
                            const int raw = flip[s] ? rule.negate(x[s]) : x[s];
                            k |= static_cast<Key>(raw) << (new_pos[s] * bits);
                        }
                    out.push_back(k);
                };
                const auto s0 = slot_order[0], s1 = slot_order[1], s2 = slot_order[2];
                auto x = val;
                auto each = [](Mask mk, auto&& f) {
                    while (mk) {
                        const int y = std::countr_zero(mk);
                        mk &= mk - 1;
                        f(y);
                    }
                };
                auto finish = [&] {
                    Mask mk = rule.third(x[s0], x[s1]) & slot_allowed[s2];
                    if (pos[s2] >= 0) {
                        if (mk >> x[s2] & 1) emit(x);
                        return;
                    }
                    each(mk, [&](int z) {
                        x[s2] = z;
                        emit(x);
                    });
                };
                auto second = [&] {
                    if (pos[s1] >= 0) return finish();
                    each(slot_allowed[s1], [&](int y) {
                        x[s1] = y;
                        finish();
                    });
                };
                if (pos[s0] >= 0) {
                    second();
                } else {
                    each(slot_allowed[s0], [&](int y) {
                        x[s0] = y;
                        second();
                    });
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        });
        std::vector<Key> next;
        for (auto& part : produced) next.insert(next.end(), part.begin(), part.end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() > max_states) throw std::length_error("frontier sweep exceeded the state limit");
        result.stats.peak_states = std::max(result.stats.peak_states, next.size());
        states = std::move(next);
        frontier = std::move(next_frontier);
        done[static_cast<std::size_t>(v)] = 1;
        if (states.empty()) break;
    }

    // The remaining frontier is the dangling edges; report them in dangling order.
    std::vector<int> where;
    for (int e : m.dangling_edges())
        where.push_back(static_cast<int>(std::find(frontier.begin(), frontier.end(), e) - frontier.begin()));
    for (Key st : states) {
        std::vector<int> t;
        for (int p : where) t.push_back(static_cast<int>((st >> (p * bits)) & value_mask));
        result.boundary.push_back(std::move(t));
    }
    std::sort(result.boundary.begin(), result.boundary.end());
    return result;
}

bool assignment_exists(const Multipole& m, const VertexRule& rule, std::span<const std::pair<int, Mask>> restrictions) {
    return !boundary_assignments(m, rule, restrictions).boundary.empty();
}

}  // namespace snark
