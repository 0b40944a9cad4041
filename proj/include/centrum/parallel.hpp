#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace centrum {

// 0 means "use hardware concurrency"; anything else is taken literally.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// Chunk boundaries depend only on n and chunk_size, never on the worker
// count, so callers can reduce per-chunk partial results in chunk order and
// get identical output for any number of threads.
template <typename Fn>
void parallel_chunks(int n, int chunk_size, int threads, Fn&& fn) {
  if (n <= 0) return;
  const int num_chunks = (n + chunk_size - 1) / chunk_size;
  threads = std::min(resolve_threads(threads), num_chunks);
  auto run_chunk = [&](int c) {
    const int begin = c * chunk_size;
    const int end = std::min(begin + chunk_size, n);
    fn(c, begin, end);
  };
  if (threads <= 1) {
    for (int c = 0; c < num_chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < num_chunks; c = next.fetch_add(1)) {
        run_chunk(c);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace centrum
