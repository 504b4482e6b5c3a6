#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace scdeck::detail {

// Runs fn(i) for i in [0, count); results must go into per-index slots so the
// outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<std::size_t>(workers, count);
  pool.reserve(nthreads);
  for (int w = 0; w < nthreads; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

}  // namespace scdeck::detail
