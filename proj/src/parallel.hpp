#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace statuslab::detail {

inline std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Calls fn(batch_index, begin, end) for consecutive [begin, end) slices of
// [0, count). Batches are claimed dynamically; callers must write results
// into per-batch slots so the outcome does not depend on the schedule.
template <typename Fn>
void for_each_batch(std::size_t count, std::size_t batch_size, std::size_t workers, Fn&& fn) {
  batch_size = std::max<std::size_t>(1, batch_size);
  const std::size_t batches = (count + batch_size - 1) / batch_size;
  workers = std::min(resolve_workers(workers), std::max<std::size_t>(1, batches));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto drain = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      try {
        fn(b, b * batch_size, std::min(count, (b + 1) * batch_size));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace statuslab::detail
