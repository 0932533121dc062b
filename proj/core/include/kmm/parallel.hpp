#pragma once

#include <cstddef>
#include <functional>

namespace kmm {

// Worker count: KMM_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(i) for every i in [0, count). Work is split into contiguous
// blocks, so each index is handled by exactly one thread and results written
// to per-index slots are schedule independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kmm
