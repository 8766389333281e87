#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace genuslab::detail {

// Splits [0, total) into contiguous chunks, one per worker; the first
// exception thrown by any worker is rethrown on the caller's thread.
inline void parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(std::uint64_t, std::uint64_t)>& work,
                            std::uint64_t min_chunk = 4096) {
  threads = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total / min_chunk + 1)));
  if (threads == 1) {
    work(0, total);
    return;
  }
  std::mutex lock;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    const std::uint64_t step = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = t * step;
      const std::uint64_t e = std::min(total, b + step);
      if (b >= e) break;
      pool.emplace_back([&, b, e] {
        try {
          work(b, e);
        } catch (...) {
          std::lock_guard guard(lock);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace genuslab::detail
