#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sts {

/// Worker count for a user request; 0 means hardware concurrency.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) over contiguous chunks. fn must only write
/// to slots owned by i. The first exception in index order is rethrown, so
/// failures do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(workers)), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::size_t> failed_at(threads, count);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = count * w / threads;
        const std::size_t end = count * (w + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
          try {
            fn(i);
          } catch (...) {
            errors[w] = std::current_exception();
            failed_at[w] = i;
            return;
          }
        }
      });
    }
  }
  for (std::size_t w = 0; w < threads; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
  }
}

}  // namespace sts
