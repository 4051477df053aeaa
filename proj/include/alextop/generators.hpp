#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "alextop/errors.hpp"
#include "alextop/funcmap.hpp"
#include "alextop/space.hpp"
#include "alextop/uniform.hpp"

namespace alextop {

inline constexpr uint32_t kMaxPartitionPoints = 13;
inline constexpr uint32_t kMaxTopologyPoints = 7;
inline constexpr uint32_t kMaxSelfMapPoints = 7;

namespace detail {

// Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
// Advances to the lexicographic successor; false once wrapped around.
inline bool next_rgs(std::vector<uint8_t>& a) {
  const size_t n = a.size();
  for (size_t i = n; i-- > 1;) {
    uint8_t prefix_max = 0;
    for (size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
    if (a[i] <= prefix_max) {
      ++a[i];
      for (size_t j = i + 1; j < n; ++j) a[j] = 0;
      return true;
    }
  }
  return false;
}

inline Partition partition_from_rgs(const std::vector<uint8_t>& a) {
  const uint32_t n = static_cast<uint32_t>(a.size());
  uint8_t k = 0;
  for (uint8_t v : a) k = std::max<uint8_t>(k, v + 1);
  std::vector<PointSet> blocks(k, PointSet(n));
  for (uint32_t x = 0; x < n; ++x) blocks[a[x]].set(x);
  return Partition(n, std::move(blocks));
}

inline FiniteSpace space_from_rows(uint32_t n, const uint64_t* rows) {
  std::vector<PointSet> basis;
  basis.reserve(n);
  for (uint32_t x = 0; x < n; ++x) basis.push_back(PointSet::from_mask(n, rows[x]));
  return FiniteSpace(n, std::move(basis));
}

// Extends rows[x..n) given fixed rows[0..x); ub[w] is the intersection of
// every fixed V(y) containing w, so any valid V(w) must stay inside it.
template <typename Fn>
void extend_topology_rows(uint32_t n, uint32_t x, std::array<uint64_t, 8>& rows,
                          std::array<uint64_t, 8> ub, Fn&& emit) {
  if (x == n) {
    emit(space_from_rows(n, rows.data()));
    return;
  }
  const uint64_t self = uint64_t{1} << x;
  const uint64_t mask = ub[x] & ~self;
  uint64_t sub = 0;
  while (true) {
    const uint64_t candidate = sub | self;
    bool ok = true;
    for (uint64_t rest = candidate & (self - 1); rest; rest &= rest - 1) {
      const uint32_t y = static_cast<uint32_t>(std::countr_zero(rest));
      if (rows[y] & ~candidate) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rows[x] = candidate;
      std::array<uint64_t, 8> next_ub = ub;
      for (uint64_t above = candidate & ~(self | (self - 1)); above; above &= above - 1)
        next_ub[std::countr_zero(above)] &= candidate;
      extend_topology_rows(n, x + 1, rows, next_ub, emit);
    }
    sub = (sub - mask) & mask;  // submasks of mask, ascending
    if (sub == 0) break;
  }
}

}  // namespace detail

/// Every set partition of {0..n-1}, in restricted-growth-string order.
template <typename Fn>
void for_each_partition(uint32_t n, Fn&& fn) {
  if (n < 1 || n > kMaxPartitionPoints)
    throw bound_error("partition enumeration supports 1 <= n <= " +
                      std::to_string(kMaxPartitionPoints) + ", got " + std::to_string(n));
  std::vector<uint8_t> rgs(n, 0);
  do {
    fn(detail::partition_from_rgs(rgs));
  } while (detail::next_rgs(rgs));
}

/// Every total map on {0..n-1}, ascending lexicographically by image list.
template <typename Fn>
void for_each_self_map(uint32_t n, Fn&& fn) {
  if (n < 1 || n > kMaxSelfMapPoints)
    throw bound_error("self-map enumeration supports 1 <= n <= " +
                      std::to_string(kMaxSelfMapPoints) + ", got " + std::to_string(n));
  std::vector<uint32_t> f(n, 0);
  while (true) {
    fn(SelfMap(n, f));
    uint32_t i = n;
    while (i > 0 && f[i - 1] == n - 1) f[--i] = 0;
    if (i == 0) return;
    ++f[i - 1];
  }
}

/// Maps with a fixed first image, in the same relative order as
/// for_each_self_map. The full sweep is the shards f(0)=0..n-1 in order.
template <typename Fn>
void for_each_self_map_with_first(uint32_t n, uint32_t first, Fn&& fn) {
  if (n < 1 || n > kMaxSelfMapPoints)
    throw bound_error("self-map enumeration supports 1 <= n <= " +
                      std::to_string(kMaxSelfMapPoints) + ", got " + std::to_string(n));
  std::vector<uint32_t> f(n, 0);
  f[0] = first;
  while (true) {
    fn(SelfMap(n, f));
    uint32_t i = n;
    while (i > 1 && f[i - 1] == n - 1) f[--i] = 0;
    if (i == 1) return;
    ++f[i - 1];
  }
}

inline uint64_t topology_shard_count(uint32_t n) {
  return uint64_t{1} << (n - 1);
}

/// Topologies whose V(0) equals the shard's first-row value. Each topology on
/// labeled points is emitted exactly once across shards; shard index order
/// concatenated with in-shard order is the canonical enumeration order.
template <typename Fn>
void for_each_topology_in_shard(uint32_t n, uint64_t shard, Fn&& fn) {
  if (n < 1 || n > kMaxTopologyPoints)
    throw bound_error("topology enumeration supports 1 <= n <= " +
                      std::to_string(kMaxTopologyPoints) + ", got " + std::to_string(n));
  if (shard >= topology_shard_count(n))
    throw bound_error("topology shard index out of range");
  const uint64_t full = (uint64_t{1} << n) - 1;
  std::array<uint64_t, 8> rows{};
  std::array<uint64_t, 8> ub{};
  ub.fill(full);
  rows[0] = (shard << 1) | 1;
  for (uint64_t above = rows[0] & ~uint64_t{1}; above; above &= above - 1)
    ub[std::countr_zero(above)] &= rows[0];
  detail::extend_topology_rows(n, 1, rows, ub, fn);
}

/// Every topology on labeled points, via reflexive-transitive basis rows.
template <typename Fn>
void for_each_topology(uint32_t n, Fn&& fn) {
  if (n < 1 || n > kMaxTopologyPoints)
    throw bound_error("topology enumeration supports 1 <= n <= " +
                      std::to_string(kMaxTopologyPoints) + ", got " + std::to_string(n));
  for (uint64_t shard = 0; shard < topology_shard_count(n); ++shard)
    for_each_topology_in_shard(n, shard, fn);
}

std::vector<Partition> all_partitions(uint32_t n);
std::vector<SelfMap> all_self_maps(uint32_t n);
std::vector<FiniteSpace> all_topologies(uint32_t n);

}  // namespace alextop
