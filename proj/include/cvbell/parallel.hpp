#pragma once

#include <cstddef>
#include <functional>

namespace cvbell {

// Worker count: CVBELL_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, count) across worker_count() threads. Each index
// is handled exactly once; callers write results into preallocated slots so
// output order never depends on scheduling. The first exception thrown by
// any worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cvbell
