#pragma once

#include <cstdint>
#include <functional>

namespace nah::util {

// Number of worker threads: min(hardware_concurrency, NAH_THREADS).
// NAH_THREADS=1 forces sequential execution everywhere.
int thread_count();

// Runs fn(i) for i in [begin, end). Work is split into contiguous chunks,
// one per worker. Each index is processed exactly once by exactly one
// thread, so results are bitwise independent of the thread count as long
// as fn(i) writes only to i-indexed outputs.
void parallel_for(int64_t begin, int64_t end, const std::function<void(int64_t)>& fn);

}  // namespace nah::util
