// parallel.hpp
// Deterministic chunked parallel-for.  Each index is computed by exactly one
// worker and accumulation happens after the join, so results are bit-identical
// for any worker count.

#pragma once

#include <cstddef>
#include <functional>

namespace mcwalk {

// Worker cap from MULTICOIN_WALK_THREADS (0 or unset = hardware concurrency).
int max_worker_threads();

// Calls fn(begin, end) on disjoint chunks covering [0, n).
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t min_chunk = 1024);

}  // namespace mcwalk
