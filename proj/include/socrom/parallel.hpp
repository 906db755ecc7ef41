#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace socrom {

/// Worker count: min(SOCROM_THREADS, hardware), at least 1.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SOCROM_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && static_cast<unsigned>(v) < hw) return static_cast<unsigned>(v);
    if (v >= 1) return static_cast<unsigned>(v) > hw ? hw : static_cast<unsigned>(v);
  }
  return hw;
}

/// Runs fn(i) for i in [0, n). Each index is processed exactly once and the
/// caller's fn must write results only to its own slot i, so the outcome is
/// independent of how indices are distributed across threads.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned nthreads = thread_budget();
  if (nthreads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (nthreads > n) nthreads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += nthreads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace socrom
