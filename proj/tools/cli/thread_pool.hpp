#pragma once

#include <cstddef>
#include <functional>

namespace broadcast::cli {

/// Worker count from BROADCAST_KIT_THREADS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on at most `workers` threads. The first exception thrown
/// by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t workers = worker_count());

}  // namespace broadcast::cli
