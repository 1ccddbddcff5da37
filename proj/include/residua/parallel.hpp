#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace residua {

/// Runs fn(i) for i in [0, n) and returns the result with the lowest index i
/// for which fn produced a value. The outer range is split into contiguous
/// chunks, one per worker; each worker keeps only its first hit, and chunks
/// are merged in index order, so the result does not depend on the thread
/// count.
template <class F>
auto scan_first(int n, int threads, F&& fn) -> decltype(fn(0)) {
  using R = decltype(fn(0));
  if (threads < 1) threads = 1;
  threads = std::min(threads, std::max(1, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i)
      if (auto r = fn(i)) return r;
    return std::nullopt;
  }
  std::vector<R> hits(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const int lo = t * chunk, hi = std::min(n, lo + chunk);
      for (int i = lo; i < hi; ++i)
        if (auto r = fn(i)) {
          hits[static_cast<size_t>(t)] = std::move(r);
          break;
        }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

}  // namespace residua
