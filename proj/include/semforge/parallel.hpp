#pragma once

#include <cstddef>
#include <functional>

namespace semforge {

// Number of workers actually used for a requested thread count (0 = auto).
int resolve_threads(int requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// claimed exactly once; the caller guarantees tasks write to disjoint state,
// so results cannot depend on the schedule. The lowest-index exception wins
// and is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace semforge
