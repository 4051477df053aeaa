#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace alextop {

/// ALEX_THREADS when set to a positive integer, else hardware concurrency.
uint32_t default_worker_count();

/// Runs fn(shard) for every shard in [0, nshards). Workers pull shards
/// dynamically but results are stored by shard index, so the returned vector
/// does not depend on scheduling or worker count.
template <typename R, typename Fn>
std::vector<R> run_sharded(uint64_t nshards, uint32_t threads, Fn&& fn) {
  std::vector<R> out(nshards);
  if (threads == 0) threads = default_worker_count();
  if (threads <= 1 || nshards <= 1) {
    for (uint64_t s = 0; s < nshards; ++s) out[s] = fn(s);
    return out;
  }
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (uint64_t s = next.fetch_add(1); s < nshards; s = next.fetch_add(1))
      out[s] = fn(s);
  };
  std::vector<std::thread> pool;
  uint32_t count = static_cast<uint32_t>(std::min<uint64_t>(threads, nshards));
  pool.reserve(count);
  for (uint32_t i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace alextop
