#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace palinprime {

struct RankRange {
  std::uint64_t begin;
  std::uint64_t end;
};

/// Fixed partition of [0, count) into contiguous rank ranges. The layout
/// depends only on `count`, never on the thread count, so merged results
/// (including floating-point ones) are reproducible.
inline std::vector<RankRange> shard_ranks(std::uint64_t count, std::uint64_t max_shards = 64) {
  const std::uint64_t shards = std::max<std::uint64_t>(1, std::min(count, max_shards));
  std::vector<RankRange> out;
  out.reserve(shards);
  for (std::uint64_t s = 0; s < shards; ++s) {
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * s / shards);
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * (s + 1) / shards);
    out.push_back({lo, hi});
  }
  return out;
}

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers and returns the
/// results in index order. The first exception (by index) is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<Result> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace palinprime
