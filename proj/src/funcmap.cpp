#include "alextop/funcmap.hpp"

#include <cassert>
#include <stdexcept>

#include "alextop/errors.hpp"
#include "alextop/generators.hpp"

namespace alextop {

SelfMap::SelfMap(uint32_t n, std::vector<uint32_t> images)
    : n_(n), f_(std::move(images)) {
  if (n_ == 0) throw std::invalid_argument("self-map: point count must be >= 1");
  if (f_.size() != n_)
    throw std::invalid_argument("self-map: expected one image per point");
  for (uint32_t x = 0; x < n_; ++x)
    if (f_[x] >= n_)
      throw std::invalid_argument("self-map: image " + std::to_string(f_[x]) +
                                  " of point " + std::to_string(x) + " is out of range");
}

SelfMap SelfMap::identity(uint32_t n) {
  std::vector<uint32_t> f(n);
  for (uint32_t x = 0; x < n; ++x) f[x] = x;
  return SelfMap(n, std::move(f));
}

KPrimalFamily::KPrimalFamily(std::vector<SelfMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw std::invalid_argument("k-primal family: k must be >= 1");
  for (const SelfMap& m : maps_)
    if (m.points() != maps_[0].points())
      throw std::invalid_argument("k-primal family: maps on different point sets");
}

namespace {

std::vector<std::vector<uint32_t>> preimage_lists(const SelfMap& f) {
  std::vector<std::vector<uint32_t>> pre(f.points());
  for (uint32_t x = 0; x < f.points(); ++x) pre[f(x)].push_back(x);
  return pre;
}

PointSet ancestors(const std::vector<std::vector<uint32_t>>& pre, uint32_t n,
                   uint32_t a) {
  PointSet seen = PointSet::single(n, a);
  std::vector<uint32_t> stack{a};
  while (!stack.empty()) {
    uint32_t x = stack.back();
    stack.pop_back();
    for (uint32_t y : pre[x])
      if (!seen.test(y)) {
        seen.set(y);
        stack.push_back(y);
      }
  }
  return seen;
}

}  // namespace

PointSet vf(const SelfMap& f, uint32_t a) {
  if (a >= f.points()) throw std::invalid_argument("vf: point out of range");
  return ancestors(preimage_lists(f), f.points(), a);
}

FiniteSpace functional_topology(const SelfMap& f) {
  const uint32_t n = f.points();
  auto pre = preimage_lists(f);
  std::vector<PointSet> basis;
  basis.reserve(n);
  for (uint32_t a = 0; a < n; ++a) basis.push_back(ancestors(pre, n, a));
  return FiniteSpace(n, std::move(basis));
}

FiniteSpace k_primal_topology(const KPrimalFamily& fam) {
  const uint32_t n = fam.points();
  std::vector<PointSet> basis(n, PointSet::full_set(n));
  for (const SelfMap& m : fam.maps()) {
    auto pre = preimage_lists(m);
    for (uint32_t a = 0; a < n; ++a) basis[a] &= ancestors(pre, n, a);
  }
  // The intersection basis is coherent for any family of total maps; a
  // failure here is a fault in this module, not bad input.
  for (uint32_t a = 0; a < n; ++a) {
    bool ok = true;
    basis[a].for_each([&](uint32_t b) {
      if (!basis[b].subset_of(basis[a])) ok = false;
    });
    if (!ok) throw std::logic_error("k-primal basis unexpectedly incoherent");
  }
  return FiniteSpace(n, std::move(basis));
}

OrbitStructure periodic_points(const SelfMap& f) {
  const uint32_t n = f.points();
  OrbitStructure orb{PointSet(n), std::vector<uint32_t>(n, 0)};
  std::vector<uint8_t> color(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<uint32_t> pos(n, 0);
  std::vector<uint32_t> path;
  for (uint32_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    path.clear();
    uint32_t x = s;
    while (color[x] == 0) {
      color[x] = 1;
      pos[x] = static_cast<uint32_t>(path.size());
      path.push_back(x);
      x = f(x);
    }
    if (color[x] == 1) {
      const uint32_t len = static_cast<uint32_t>(path.size()) - pos[x];
      for (uint32_t i = pos[x]; i < path.size(); ++i) {
        orb.periodic.set(path[i]);
        orb.period[path[i]] = len;
      }
    }
    for (uint32_t p : path) color[p] = 2;
  }
  return orb;
}

C123Report check_c123(const FiniteSpace& space) {
  const uint32_t n = space.points();
  C123Report r{true, true, true};
  for (uint32_t x = 0; x < n && r.c1; ++x)
    for (uint32_t y = x + 1; y < n && r.c1; ++y) {
      const PointSet& vx = space.nbhd(x);
      const PointSet& vy = space.nbhd(y);
      if (vx.intersects(vy) && !vx.subset_of(vy) && !vy.subset_of(vx)) r.c1 = false;
    }
  for (uint32_t x = 0; x < n && r.c2; ++x) {
    bool proper_above = false;
    for (uint32_t y = 0; y < n; ++y)
      if (space.nbhd(x).subset_of(space.nbhd(y)) && space.nbhd(x) != space.nbhd(y))
        proper_above = true;
    if (!proper_above) continue;
    for (uint32_t z = 0; z < n; ++z)
      if (z != x && space.nbhd(z) == space.nbhd(x)) r.c2 = false;
  }
  return r;
}

SelfMap cyclic_map_from_partition(const Partition& p) {
  std::vector<uint32_t> f(p.points(), 0);
  for (const PointSet& block : p.blocks()) {
    std::vector<uint32_t> pts = block.to_indices();
    for (size_t i = 0; i < pts.size(); ++i) f[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return SelfMap(p.points(), std::move(f));
}

namespace {

// C1-C3 guarantee: V-equality classes whose V set is not maximal are
// singletons, and the classes above any point form a chain. Cycle each
// maximal class; route every other point to the next class up its chain.
SelfMap build_generating_map(const FiniteSpace& space) {
  const uint32_t n = space.points();
  std::vector<PointSet> classes = v_equality_classes(space);
  const size_t k = classes.size();
  auto v_of = [&](size_t c) -> const PointSet& {
    return space.nbhd(classes[c].min());
  };

  std::vector<uint32_t> f(n, 0);
  for (size_t c = 0; c < k; ++c) {
    bool maximal = true;
    for (size_t d = 0; d < k; ++d)
      if (d != c && v_of(c).subset_of(v_of(d)) && v_of(c) != v_of(d)) maximal = false;
    if (maximal) {
      std::vector<uint32_t> pts = classes[c].to_indices();
      for (size_t i = 0; i < pts.size(); ++i) f[pts[i]] = pts[(i + 1) % pts.size()];
    } else {
      // Smallest V set strictly above; unique because the candidates chain.
      int target = -1;
      for (size_t d = 0; d < k; ++d) {
        if (d == c || !v_of(c).subset_of(v_of(d)) || v_of(c) == v_of(d)) continue;
        if (target < 0 || v_of(d).subset_of(v_of(static_cast<size_t>(target))))
          target = static_cast<int>(d);
      }
      classes[c].for_each(
          [&](uint32_t x) { f[x] = classes[static_cast<size_t>(target)].min(); });
    }
  }
  return SelfMap(n, std::move(f));
}

}  // namespace

std::optional<SelfMap> find_generating_map(const FiniteSpace& space, MapSearch mode) {
  const uint32_t n = space.points();
  if (mode == MapSearch::exhaustive) {
    if (n > kMaxExhaustiveMapSearch)
      throw bound_error("exhaustive map search supports n <= " +
                        std::to_string(kMaxExhaustiveMapSearch) + ", got " +
                        std::to_string(n));
    std::optional<SelfMap> found;
    for_each_self_map(n, [&](const SelfMap& m) {
      if (!found && functional_topology(m) == space) found = m;
    });
    return found;
  }

  if (!check_c123(space).all()) return std::nullopt;
  UniformizabilityVerdict verdict = decide_uniformizable(space);
  SelfMap witness = verdict.uniformizable ? cyclic_map_from_partition(*verdict.witness)
                                          : build_generating_map(space);
  if (functional_topology(witness) != space)
    throw std::logic_error("generating-map construction failed to reproduce the space");
  return witness;
}

Theorem80Result theorem80_check(const SelfMap& f) {
  Theorem80Result r;
  r.uniformizable = decide_uniformizable(functional_topology(f)).uniformizable;
  r.per_equals_x = periodic_points(f).periodic.is_full();
  assert(r.uniformizable == r.per_equals_x);
  return r;
}

}  // namespace alextop
