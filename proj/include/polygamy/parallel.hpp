#pragma once

#include <cstddef>
#include <functional>

namespace polygamy {

/// Worker count: `requested` if positive, else POLYGAMY_LAB_THREADS, else
/// the hardware concurrency.
int worker_count(int requested = 0);

/// Runs body(i) for i in [0, n) on up to `workers` threads. Exceptions are
/// rethrown on the caller's thread (the one from the lowest index wins).
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

}  // namespace polygamy
