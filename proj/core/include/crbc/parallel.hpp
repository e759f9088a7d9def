#ifndef CRBC_PARALLEL_HPP
#define CRBC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace crbc {

/// Number of workers used by grid evaluations: hardware concurrency,
/// capped by the CRBC_THREADS environment variable when set.
unsigned worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on worker_count()
/// threads. Each index is processed exactly once; callers guarantee
/// determinism by writing results keyed on the index.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace crbc

#endif  // CRBC_PARALLEL_HPP
