#pragma once

#include <functional>

namespace cpv {

// Worker count for embarrassingly parallel loops: hardware concurrency capped
// by the CPV_THREADS environment variable (if set and positive).
int worker_count();

// Runs fn(0..n-1) across worker_count() threads. Results must be written to
// per-index slots by the caller; iteration order is unspecified but the
// resulting data is deterministic as long as fn(i) is.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace cpv
