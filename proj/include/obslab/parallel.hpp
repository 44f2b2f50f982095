#pragma once

#include <cstddef>
#include <functional>

namespace obslab {

/// Worker count: OBSLAB_THREADS if set to a positive integer, else the hardware concurrency.
int thread_count();

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
/// Chunk boundaries depend only on n and the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace obslab
