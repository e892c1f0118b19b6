#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hybrid {

/// Process-wide cap on worker threads; 0 means hardware concurrency.
inline std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{0};
  return cap;
}

inline int worker_count() {
  int c = thread_cap().load();
  if (c <= 0) c = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return c;
}

/// Runs fn(i) for i in [0, n). Results must be written to per-index slots.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const int workers = std::min<int>(worker_count(), static_cast<int>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hybrid
