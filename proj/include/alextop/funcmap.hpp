#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alextop/pointset.hpp"
#include "alextop/space.hpp"
#include "alextop/uniform.hpp"

namespace alextop {

/// Total function on the points {0..n-1}.
class SelfMap {
 public:
  SelfMap(uint32_t n, std::vector<uint32_t> images);
  static SelfMap identity(uint32_t n);

  uint32_t points() const { return n_; }
  uint32_t operator()(uint32_t x) const { return f_[x]; }
  const std::vector<uint32_t>& images() const { return f_; }

  bool operator==(const SelfMap& o) const { return n_ == o.n_ && f_ == o.f_; }
  bool operator!=(const SelfMap& o) const { return !(*this == o); }

 private:
  uint32_t n_;
  std::vector<uint32_t> f_;
};

struct OrbitStructure {
  PointSet periodic;             // points lying on a cycle
  std::vector<uint32_t> period;  // least m >= 1 with f^m(x) = x; 0 off-cycle
};

/// k self-maps on a common point set, k >= 1.
class KPrimalFamily {
 public:
  explicit KPrimalFamily(std::vector<SelfMap> maps);
  uint32_t points() const { return maps_[0].points(); }
  uint32_t k() const { return static_cast<uint32_t>(maps_.size()); }
  const std::vector<SelfMap>& maps() const { return maps_; }

 private:
  std::vector<SelfMap> maps_;
};

struct C123Report {
  bool c1 = false;  // any two basis sets nested or disjoint
  bool c2 = false;  // a point with a properly larger V above it shares its V with no one
  bool c3 = false;  // intervals {z : V(y) <= V(z) <= V(x)} finite; trivial here
  bool all() const { return c1 && c2 && c3; }
};

/// Union of the iterated preimages of a; stabilizes within n steps.
PointSet vf(const SelfMap& f, uint32_t a);

/// Space with V(x) = vf(f, x).
FiniteSpace functional_topology(const SelfMap& f);

/// Space with V(a) = intersection of vf(f_i, a) over the family.
FiniteSpace k_primal_topology(const KPrimalFamily& fam);

OrbitStructure periodic_points(const SelfMap& f);

C123Report check_c123(const FiniteSpace& space);

enum class MapSearch {
  characterize,  // decide via C1-C3 and build a witness constructively
  exhaustive,    // scan all n^n maps; point count capped
};

inline constexpr uint32_t kMaxExhaustiveMapSearch = 6;

/// A map whose functional topology equals the space, or nullopt. In
/// characterize mode the returned witness is re-checked against the space.
std::optional<SelfMap> find_generating_map(const FiniteSpace& space,
                                           MapSearch mode = MapSearch::characterize);

/// Each block becomes one cycle through its points in ascending order.
SelfMap cyclic_map_from_partition(const Partition& p);

struct Theorem80Result {
  bool uniformizable = false;
  bool per_equals_x = false;
};

/// Evaluates both sides of the periodicity criterion for f's functional
/// topology; the two fields agree for every total map.
Theorem80Result theorem80_check(const SelfMap& f);

}  // namespace alextop
