#pragma once

#include <cstddef>
#include <functional>

namespace fracmod {

/// Worker count: hardware concurrency, capped by FRACMOD_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over contiguous chunks. Each index is
/// handled by exactly one worker, so per-index results do not depend on the
/// schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fracmod
