#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hyperrank {

// Worker count: HYPERRANK_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("HYPERRANK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Sum of chunk(lo, hi) over a contiguous split of [begin, end). Integer sums make
// the result independent of the split.
template <class Chunk>
std::uint64_t parallel_sum(std::uint64_t begin, std::uint64_t end, Chunk chunk) {
  if (end <= begin) return 0;
  std::uint64_t total = end - begin;
  unsigned workers = thread_count();
  if (workers <= 1 || total < (1u << 16)) return chunk(begin, end);
  if (workers > total) workers = static_cast<unsigned>(total);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = begin + total * w / workers;
    std::uint64_t hi = begin + total * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { partial[w] = chunk(lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

}  // namespace hyperrank
