#pragma once

#include <cstddef>
#include <functional>

namespace xent {

/// Worker cap: the XENT_THREADS environment variable when it holds a
/// positive integer, otherwise the hardware concurrency; never below 1.
int worker_count();

/// Runs fn(i) for every i in [0, count) across up to worker_count()
/// threads. fn must be safe to call concurrently for distinct indices;
/// exceptions from fn propagate after all workers join.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace xent
