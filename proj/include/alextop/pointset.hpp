#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace alextop {

/// Subset of the points {0..n-1}, stored as 64-bit words. Word count grows
/// with the universe, so universes beyond 64 points work the same way.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(uint32_t universe) : n_(universe), w_(word_count(universe), 0) {}

  static PointSet full_set(uint32_t universe) {
    PointSet s(universe);
    if (universe == 0) return s;
    for (auto& w : s.w_) w = ~uint64_t{0};
    s.w_.back() &= top_mask(universe);
    return s;
  }

  static PointSet single(uint32_t universe, uint32_t x) {
    PointSet s(universe);
    s.set(x);
    return s;
  }

  static PointSet of(uint32_t universe, std::initializer_list<uint32_t> xs) {
    PointSet s(universe);
    for (uint32_t x : xs) s.set(x);
    return s;
  }

  static PointSet from_indices(uint32_t universe, const std::vector<uint32_t>& xs) {
    PointSet s(universe);
    for (uint32_t x : xs) s.set(x);
    return s;
  }

  /// Low word as a plain mask; only meaningful for universes <= 64.
  static PointSet from_mask(uint32_t universe, uint64_t mask) {
    assert(universe <= 64);
    PointSet s(universe);
    if (!s.w_.empty()) s.w_[0] = mask & top_mask(universe);
    return s;
  }

  uint32_t universe() const { return n_; }

  bool test(uint32_t x) const {
    assert(x < n_);
    return (w_[x >> 6] >> (x & 63)) & 1u;
  }
  void set(uint32_t x) {
    assert(x < n_);
    w_[x >> 6] |= uint64_t{1} << (x & 63);
  }
  void reset(uint32_t x) {
    assert(x < n_);
    w_[x >> 6] &= ~(uint64_t{1} << (x & 63));
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == n_; }

  /// Smallest member; universe() when empty.
  uint32_t min() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<uint32_t>(i * 64 + std::countr_zero(w_[i]));
    return n_;
  }

  bool subset_of(const PointSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const PointSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  PointSet& operator|=(const PointSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }

  bool operator==(const PointSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  /// Numeric order (most significant word first); sets must share a universe.
  bool operator<(const PointSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        fn(static_cast<uint32_t>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](uint32_t x) { out.push_back(x); });
    return out;
  }

  uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](uint32_t x) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    });
    return s + "}";
  }

 private:
  static uint32_t word_count(uint32_t n) { return (n + 63) / 64; }
  static uint64_t top_mask(uint32_t n) {
    uint32_t r = n & 63;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
  }

  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace alextop
