#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sugawara {

/// Runs fn(index, worker) for index in [0, count) on up to `workers`
/// threads. Each worker id is stable for the thread, so callers can keep
/// one non-thread-safe engine per worker. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn)
{
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k, w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sugawara
