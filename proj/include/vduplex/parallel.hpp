#pragma once

#include <cstddef>
#include <functional>

namespace vduplex {

/// Thread budget: `requested` if positive, else the VDUPLEX_THREADS
/// environment variable, else the hardware concurrency.
unsigned resolve_threads(int requested);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers write
/// results into preallocated per-index slots, so any later reduction is
/// independent of the thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace vduplex
