#pragma once
// Minimal work-sharing helper: run an indexed loop on a fixed number of
// threads. Deterministic outputs are up to the caller (write results into
// pre-sized slots, never append concurrently).

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bridgearc {

inline void parallel_for_index(std::size_t n, int jobs,
                               const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr firstError;
  std::mutex errorMutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (firstError) return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!firstError) firstError = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int extra = jobs - 1;
  if (static_cast<std::size_t>(extra) > n - 1)
    extra = static_cast<int>(n - 1);
  threads.reserve(static_cast<std::size_t>(extra));
  for (int t = 0; t < extra; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (firstError) std::rethrow_exception(firstError);
}

}  // namespace bridgearc
