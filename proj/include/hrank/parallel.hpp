#pragma once

#include <cstddef>
#include <functional>

namespace hrank {

/// Number of worker threads the library may use. Resolves to the HRANK_THREADS
/// environment variable when set (minimum 1), otherwise hardware concurrency.
std::size_t worker_threads();

/// Runs fn(begin..end) over disjoint index ranges, splitting [0, n) across up
/// to worker_threads() threads. Each index is processed by exactly one thread,
/// so results must not depend on which thread runs which range. Runs inline
/// when n is small or only one worker is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hrank
