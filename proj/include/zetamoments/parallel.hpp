#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zm {

// 0 means hardware concurrency.
void set_max_threads(unsigned n) noexcept;
unsigned max_threads() noexcept;

namespace detail {
inline bool& in_parallel_region() noexcept {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

// Runs fn(i) for i in [0, n). Work is claimed in fixed-size chunks, so results
// must be written to per-index slots; this keeps outputs independent of the
// thread count. The first exception (lowest index) is rethrown. Nested calls
// run serially on the calling worker.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t chunk = 16) {
  unsigned workers = std::min<std::size_t>(max_threads(), (n + chunk - 1) / std::max<std::size_t>(chunk, 1));
  if (workers <= 1 || detail::in_parallel_region()) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t err_index = n;
  std::exception_ptr err;
  auto body = [&] {
    bool& region = detail::in_parallel_region();
    bool saved = region;
    region = true;
    struct Restore {
      bool& r;
      bool v;
      ~Restore() { r = v; }
    } restore{region, saved};
    for (;;) {
      std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      std::size_t end = std::min(n, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (i < err_index) {
            err_index = i;
            err = std::current_exception();
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace zm
