#pragma once

#include <cstddef>
#include <functional>

namespace gaudin {

// Worker count: GAUDIN_THREADS if set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Each index is
// visited exactly once; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gaudin
