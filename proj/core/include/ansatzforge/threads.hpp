#pragma once

#include <cstddef>
#include <functional>

namespace ansatzforge {

/// Worker budget for internal parallelism, capped by the ANSATZ_FORGE_THREADS
/// environment variable (unset or invalid means 1, i.e. serial).
std::size_t thread_budget();

/// Runs fn(i) for i in [0, count), spread over at most thread_budget()
/// workers. Results must be written to per-index slots by the caller, which
/// keeps reductions deterministic.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace ansatzforge
