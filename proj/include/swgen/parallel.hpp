#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace swgen {

/// Number of worker threads for the row-parallel kernels. Zero means one per
/// hardware thread; one runs inline on the caller.
struct Threads {
  unsigned count = 0;

  unsigned resolve(std::size_t work_items) const {
    unsigned n = count == 0 ? std::max(1u, std::thread::hardware_concurrency()) : count;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work_items, 1)));
  }
};

/// Runs fn(i) for i in [0, count). Items are split into contiguous blocks, one
/// per worker; fn must only touch state owned by index i.
template <typename Fn>
void parallel_for(std::size_t count, Threads threads, Fn&& fn) {
  const unsigned workers = threads.resolve(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace swgen
