#pragma once

#include <cstddef>
#include <functional>

namespace phdiv {

/// Worker count used by parallel loops. Defaults to the PHDIV_THREADS
/// environment variable (0 or unset means hardware concurrency).
std::size_t thread_count();
/// Overrides the worker count; 0 restores the default.
void set_thread_count(std::size_t threads);

/// Calls body(begin, end) on disjoint chunks covering [0, count).
/// Chunks may run concurrently, so body must only write to per-index state.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace phdiv
