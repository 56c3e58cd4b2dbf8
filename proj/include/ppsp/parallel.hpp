#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ppsp {

/// Job count: an explicit request wins, then CENSUS_JOBS, then the number of
/// hardware threads. Throws PreconditionError on a malformed CENSUS_JOBS.
unsigned resolve_jobs(std::optional<unsigned> requested);

/// out[i] = fn(i) for i < n on up to `jobs` threads. Results keep index
/// order; the first exception thrown by any task is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F fn) {
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };

  unsigned count = jobs == 0 ? 1 : jobs;
  if (count > n) count = static_cast<unsigned>(n == 0 ? 1 : n);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<T> out;
  out.reserve(n);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace ppsp
