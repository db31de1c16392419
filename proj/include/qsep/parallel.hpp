#pragma once

#include <cstddef>
#include <functional>

namespace qsep {

// Worker count: QSEP_THREADS override, else hardware concurrency, min 1.
unsigned worker_count();

// Run fn(0..n-1) on up to worker_count() threads. Each index owns its own
// output slot, so results are deterministic regardless of scheduling. The
// first exception thrown by any index is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qsep
