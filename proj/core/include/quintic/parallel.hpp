#pragma once

#include <cstddef>
#include <functional>

namespace quintic {

/// Worker count: QUINTIC_STRATA_THREADS when set to a positive integer, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first exception is rethrown
/// after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace quintic
