#include "snark/parallel.hpp"

namespace snark {

namespace {
std::atomic<int> thread_cap{1};
}

int max_threads() { return thread_cap.load(std::memory_order_relaxed); }

void set_max_threads(int n) { thread_cap.store(std::max(1, n), std::memory_order_relaxed); }

}  // namespace snark
