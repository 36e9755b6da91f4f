#pragma once

// Data-parallel sweep kernels. Every kernel has a serial reference path and
// an OpenMP path that must produce identical results; callers pick one with
// Exec. Exceptions thrown inside a parallel region are captured and rethrown
// on the calling thread.

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

namespace skew3 {

enum class Exec { serial, parallel };

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard lock(mu_);
    if (!ptr_) ptr_ = std::current_exception();
  }
  void rethrow() const {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr ptr_;
};

}  // namespace detail

/// Smallest index i in [0, n) with pred(i) == false, or nullopt.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t n, Pred&& pred, Exec exec) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> first{n};
  detail::ExceptionSlot error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    // Indices beyond a known failure cannot change the answer.
    if (i > first.load(std::memory_order_relaxed)) continue;
    try {
      if (!pred(i)) {
        std::size_t cur = first.load();
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  if (first.load() == n) return std::nullopt;
  return first.load();
}

/// out[i] = f(i) for i in [0, n).
template <class F>
auto map_indices(std::size_t n, F&& f, Exec exec) -> std::vector<decltype(f(std::size_t{0}))> {
  using T = decltype(f(std::size_t{0}));
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  detail::ExceptionSlot error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

}  // namespace skew3
