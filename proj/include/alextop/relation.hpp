#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "alextop/pointset.hpp"

namespace alextop {

/// Binary relation on {0..n-1} x {0..n-1}; row(x) = { y : (x,y) in R }.
class Relation {
 public:
  Relation() = default;
  explicit Relation(uint32_t n) : n_(n), rows_(n, PointSet(n)) {}

  static Relation diagonal(uint32_t n) {
    Relation r(n);
    for (uint32_t x = 0; x < n; ++x) r.set(x, x);
    return r;
  }
  static Relation full(uint32_t n) {
    Relation r(n);
    for (uint32_t x = 0; x < n; ++x) r.rows_[x] = PointSet::full_set(n);
    return r;
  }

  uint32_t points() const { return n_; }

  bool test(uint32_t x, uint32_t y) const { return rows_[x].test(y); }
  void set(uint32_t x, uint32_t y) { rows_[x].set(y); }

  const PointSet& row(uint32_t x) const { return rows_[x]; }
  PointSet& row(uint32_t x) { return rows_[x]; }

  bool reflexive() const {
    for (uint32_t x = 0; x < n_; ++x)
      if (!rows_[x].test(x)) return false;
    return true;
  }

  bool symmetric() const {
    for (uint32_t x = 0; x < n_; ++x)
      for (uint32_t y = x + 1; y < n_; ++y)
        if (test(x, y) != test(y, x)) return false;
    return true;
  }

  // (x,y) and (y,z) present imply (x,z): equivalently row(y) subset of row(x)
  // whenever y is in row(x).
  bool transitive() const {
    for (uint32_t x = 0; x < n_; ++x) {
      bool ok = true;
      rows_[x].for_each([&](uint32_t y) {
        if (!rows_[y].subset_of(rows_[x])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  Relation transposed() const {
    Relation t(n_);
    for (uint32_t x = 0; x < n_; ++x)
      rows_[x].for_each([&](uint32_t y) { t.set(y, x); });
    return t;
  }

  /// {(x,z) : exists y with (x,y) in this and (y,z) in o}.
  Relation composed_with(const Relation& o) const {
    assert(n_ == o.n_);
    Relation c(n_);
    for (uint32_t x = 0; x < n_; ++x)
      rows_[x].for_each([&](uint32_t y) { c.rows_[x] |= o.rows_[y]; });
    return c;
  }

  bool subset_of(const Relation& o) const {
    assert(n_ == o.n_);
    for (uint32_t x = 0; x < n_; ++x)
      if (!rows_[x].subset_of(o.rows_[x])) return false;
    return true;
  }

  bool operator==(const Relation& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const Relation& o) const { return !(*this == o); }

 private:
  uint32_t n_ = 0;
  std::vector<PointSet> rows_;
};

}  // namespace alextop
