#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace borank {

inline int default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

/// Applies f to every index in [0, n) on `workers` threads; results land in
/// a vector in index order, so downstream output is deterministic regardless
/// of scheduling.
template <typename Result>
std::vector<Result> parallel_index_map(int n, int workers,
                                       const std::function<Result(int)>& f) {
  std::vector<Result> out(static_cast<std::size_t>(n));
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  const int nthreads = std::min(workers, n);
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        out[i] = f(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace borank
