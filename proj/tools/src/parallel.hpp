// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace wetbeam::tools {

/// Runs fn(0..count-1) across `workers` threads. Work items must be
/// independent; results keyed by index stay deterministic under any worker
/// count. The first exception wins and is rethrown on the calling thread.
inline void parallel_for(std::size_t count, std::size_t workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  std::atomic_flag error_guard = ATOMIC_FLAG_INIT;
  const std::size_t n_threads = workers < count ? workers : count;
  pool.reserve(n_threads);
  for (std::size_t w = 0; w < n_threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          if (!error_guard.test_and_set()) {
            error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

/// Default worker count: the machine's concurrency, clamped to [1, 8].
inline std::size_t default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : (hw > 8 ? 8 : hw);
}

}  // namespace wetbeam::tools
