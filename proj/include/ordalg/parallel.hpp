#pragma once

// Deterministic parallel search used by the window sweeps.
//
// The worker count comes from ORDALG_WORKERS (default 1). Results never
// depend on it: searches report the smallest matching index.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

namespace ordalg {

[[nodiscard]] inline unsigned worker_count() {
  if (const char *env = std::getenv("ORDALG_WORKERS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  return 1;
}

/// Smallest i in [0, n) with pred(i), or nullopt. `pred` must be safe to call
/// concurrently.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred &&pred) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{n};
  std::atomic<std::size_t> next{0};
  constexpr std::size_t chunk = 16;
  auto work = [&] {
    for (;;) {
      std::size_t start = next.fetch_add(chunk);
      if (start >= n || start >= best.load()) return;
      std::size_t stop = std::min(n, start + chunk);
      for (std::size_t i = start; i < stop; ++i) {
        if (i >= best.load()) return;
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  if (best.load() == n) return std::nullopt;
  return best.load();
}

/// Evaluates f(i) for every i in [0, n) and returns the results in index
/// order. `f` must be safe to call concurrently.
template <class R, class F> std::vector<R> parallel_map(std::size_t n, F &&f) {
  std::vector<R> out(n);
  const unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
      out[i] = f(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  return out;
}

} // namespace ordalg
