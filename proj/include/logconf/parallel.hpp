#ifndef LOGCONF_PARALLEL_HPP
#define LOGCONF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace logconf {

/// Thread cap: LOGCONF_THREADS if set, otherwise hardware concurrency.
inline int max_threads() {
  if (const char* env = std::getenv("LOGCONF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs f(i) for i in [0, n). Work items must be independent; results should
/// be written to preallocated slots so aggregation order stays deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  const int threads = std::min<std::size_t>(max_threads(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        f(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace logconf

#endif  // LOGCONF_PARALLEL_HPP
