#pragma once

#include <functional>

namespace jscat {

// Worker count resolution order: set_thread_count (nonzero), JSCAT_THREADS,
// hardware concurrency.  Always at least 1.
int thread_count();
void set_thread_count(int n);  // 0 restores automatic resolution

// Runs body(i) for i in [0, n).  Work is split into contiguous chunks, one
// per worker; each index is processed exactly once and results must go to
// per-index output slots, so output is identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace jscat
