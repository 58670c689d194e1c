#pragma once

#include <cstddef>
#include <functional>

namespace bgamma {

// 0 means the hardware's available parallelism.
std::size_t resolve_jobs(std::size_t jobs);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must go to
// per-index slots; ordering is the caller's business. If any call throws,
// the exception from the lowest index is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace bgamma
