#pragma once

#include <cstddef>
#include <functional>

namespace delcode {

// Worker count from DELCODE_THREADS (default: hardware concurrency, >= 1).
unsigned worker_count();
void set_worker_count(unsigned n);  // 0 restores the environment default

// Runs body(i) for i in [0, count) on worker_count() threads. Iterations are
// claimed dynamically; callers write results into per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace delcode
