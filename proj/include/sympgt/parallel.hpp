#pragma once

#include <cstddef>
#include <functional>

namespace sympgt {

// Runs fn(i) for i in [0, count) across up to `jobs` worker threads.
// Workers take disjoint index ranges, so results written to preallocated
// per-index slots need no locking and the outcome is independent of
// scheduling. jobs <= 1 runs inline. Exceptions from workers are rethrown
// on the calling thread.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace sympgt
