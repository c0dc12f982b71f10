#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace snark {

/// Process-wide cap on worker threads. Defaults to 1; the CLI sets it from --threads.
int max_threads();
void set_max_threads(int n);

/// Runs body(i) for i in [0, n) on up to max_threads() workers. Work is claimed
/// dynamically, so body must write only to slot i of any shared output. The
/// first exception thrown by body stops the workers and is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    const auto workers = static_cast<std::size_t>(std::max(1, max_threads()));
    if (workers == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;
    auto run = [&] {
        for (std::size_t i = next++; i < n && !failed.load(); i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_lock);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    const auto spawn = std::min(workers, n) - 1;
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Evaluates body(i) and collects results in index order.
template <class T, class Body>
std::vector<T> parallel_map(std::size_t n, Body&& body) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = body(i); });
    return out;
}

/// Lowest index i for which body(i) yields a value. Indices above the best hit
/// found so far are skipped, so the answer never depends on scheduling.
template <class T, class Body>
std::optional<std::pair<std::size_t, T>> parallel_find_first(std::size_t n, Body&& body) {
    std::atomic<std::size_t> best{n};
    std::vector<std::optional<T>> slot(n);
    parallel_for(n, [&](std::size_t i) {
        if (i > best.load()) return;
        auto r = body(i);
        if (!r) return;
        slot[i] = std::move(r);
        auto cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
    });
    const auto b = best.load();
    if (b == n) return std::nullopt;
    return std::make_pair(b, std::move(*slot[b]));
}

}  // namespace snark
