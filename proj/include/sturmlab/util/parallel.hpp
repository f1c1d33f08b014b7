#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sturmlab::util {

/// Threads from STURMLAB_THREADS, else hardware concurrency (at least 1).
unsigned default_threads();

/// out[i] = fn(i) for i in [0, n), evaluated on up to `threads` workers.
/// The result order is the index order whatever the thread count; the first
/// exception (by index) is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t err_index = n;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned j = 0; j < t; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace sturmlab::util
