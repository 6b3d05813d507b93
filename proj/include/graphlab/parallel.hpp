#ifndef GRAPHLAB_PARALLEL_HPP
#define GRAPHLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace graphlab {

// Worker cap from GRAPHLAB_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

// Runs body(i) for i in [0, count).  Each index is processed exactly once;
// callers keep determinism by writing results into index-addressed slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace graphlab

#endif
