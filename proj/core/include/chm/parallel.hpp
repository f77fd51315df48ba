#pragma once

#include <cstddef>
#include <functional>

namespace chm {

// Worker count: min(hardware_concurrency, CHM_THREADS) when the environment
// variable is set to a positive integer, hardware_concurrency otherwise.
unsigned thread_count();

// Runs fn(i) for i in [0, n) on thread_count() threads.  Callers write
// results into pre-sized slots indexed by i, so the output is deterministic
// regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace chm
