#include "crbc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace crbc {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CRBC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = std::min<long>(v, 1024);
  }
  return n;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  const unsigned workers = worker_count();
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    fn(0, n);
    return;
  }
  const std::size_t shards = std::min<std::size_t>(workers, n);
  const std::size_t chunk = (n + shards - 1) / shards;
  std::vector<std::thread> pool;
  pool.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t lo = s * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace crbc
