#pragma once

#include <cstddef>
#include <functional>

namespace linperiod {

// Worker cap: LINPERIOD_THREADS if set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
unsigned thread_limit();

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// visited exactly once; callers write results into per-index slots.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace linperiod
