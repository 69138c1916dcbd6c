#pragma once

#include <thread>
#include <vector>

#include "vrel/common.hpp"

namespace vrel {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(begin, end) over contiguous chunks of [0, count). Each chunk is
// owned by exactly one thread, so writes to disjoint output rows need no
// synchronization and results do not depend on the thread count.
template <typename Fn>
void parallel_chunks(Index count, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count <= 1) {
    fn(Index{0}, count);
    return;
  }
  const Index n_chunks = std::min<Index>(threads, count);
  const Index base = count / n_chunks;
  const Index extra = count % n_chunks;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_chunks));
  Index begin = 0;
  for (Index c = 0; c < n_chunks; ++c) {
    const Index len = base + (c < extra ? 1 : 0);
    const Index end = begin + len;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace vrel
