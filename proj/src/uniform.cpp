#include "alextop/uniform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alextop/generators.hpp"

namespace alextop {

Partition::Partition(uint32_t n, std::vector<PointSet> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, 0) {
  if (n_ == 0) throw std::invalid_argument("partition: point count must be >= 1");
  if (blocks_.empty()) throw std::invalid_argument("partition: no blocks");
  PointSet covered(n_);
  for (const PointSet& b : blocks_) {
    if (b.universe() != n_)
      throw std::invalid_argument("partition: block universe mismatch");
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    if (covered.intersects(b))
      throw std::invalid_argument("partition: blocks overlap at point " +
                                  std::to_string((covered & b).min()));
    covered |= b;
  }
  if (!covered.is_full())
    throw std::invalid_argument("partition: blocks do not cover the point set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PointSet& a, const PointSet& b) { return a.min() < b.min(); });
  for (uint32_t i = 0; i < blocks_.size(); ++i)
    blocks_[i].for_each([&](uint32_t x) { block_of_[x] = i; });
}

Partition Partition::singletons(uint32_t n) {
  std::vector<PointSet> blocks;
  blocks.reserve(n);
  for (uint32_t x = 0; x < n; ++x) blocks.push_back(PointSet::single(n, x));
  return Partition(n, std::move(blocks));
}

Partition Partition::from_block_index(uint32_t n, const std::vector<uint32_t>& idx) {
  if (idx.size() != n)
    throw std::invalid_argument("partition: block index must cover every point");
  std::vector<PointSet> blocks;
  std::vector<int> pos;
  for (uint32_t x = 0; x < n; ++x) {
    uint32_t id = idx[x];
    if (id >= pos.size()) pos.resize(id + 1, -1);
    if (pos[id] < 0) {
      pos[id] = static_cast<int>(blocks.size());
      blocks.push_back(PointSet(n));
    }
    blocks[pos[id]].set(x);
  }
  return Partition(n, std::move(blocks));
}

UniformizabilityVerdict decide_uniformizable(const FiniteSpace& space) {
  const uint32_t n = space.points();
  for (uint32_t a = 0; a < n; ++a) {
    std::optional<uint32_t> bad;
    space.nbhd(a).for_each([&](uint32_t b) {
      if (!bad && space.nbhd(b) != space.nbhd(a)) bad = b;
    });
    if (bad) {
      UniformizabilityVerdict v;
      v.uniformizable = false;
      v.counterexample = {a, *bad};
      return v;
    }
  }
  UniformizabilityVerdict v;
  v.uniformizable = true;
  v.witness = Partition(n, v_equality_classes(space));
  return v;
}

EntourageBase entourage_base_from_partition(const Partition& p) {
  const uint32_t n = p.points();
  Relation alpha0(n);
  for (const PointSet& block : p.blocks())
    block.for_each([&](uint32_t x) { alpha0.row(x) |= block; });
  return EntourageBase{std::move(alpha0)};
}

UniformAxiomReport verify_uniform_axioms(const Relation& alpha0) {
  UniformAxiomReport r;
  r.diagonal_contained = Relation::diagonal(alpha0.points()).subset_of(alpha0);
  // Both hold for any up-filter {alpha : alpha0 <= alpha}: supersets of a
  // member are members, and the intersection of two members still contains
  // alpha0.
  r.upward_closed = true;
  r.intersection_closed = true;
  r.inverse_closed = alpha0.transposed() == alpha0;
  // The smallest candidate for beta with beta o beta <= alpha is alpha0
  // itself, so the axiom reduces to alpha0 o alpha0 <= alpha0.
  r.has_half_refinement = alpha0.composed_with(alpha0).subset_of(alpha0);
  return r;
}

FiniteSpace topology_from_entourage(const EntourageBase& base) {
  const Relation& a = base.alpha0;
  const uint32_t n = a.points();
  if (n == 0) throw std::invalid_argument("entourage: point count must be >= 1");
  if (!Relation::diagonal(n).subset_of(a))
    throw std::invalid_argument("entourage: base does not contain the diagonal");
  if (a.transposed() != a)
    throw std::invalid_argument("entourage: base is not symmetric");
  if (a.composed_with(a) != a)
    throw std::invalid_argument("entourage: base is not idempotent under composition");
  std::vector<PointSet> basis;
  basis.reserve(n);
  for (uint32_t x = 0; x < n; ++x) basis.push_back(a.row(x));
  return FiniteSpace(n, std::move(basis));
}

bool leq_relation_is_equivalence(const FiniteSpace& space) {
  const uint32_t n = space.points();
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (space.nbhd(b).subset_of(space.nbhd(a)) &&
          !space.nbhd(a).subset_of(space.nbhd(b)))
        return false;
  return true;
}

namespace detail {

FiniteSpace quotient_space_by_preimage(const FiniteSpace& space,
                                       const Partition& classes) {
  const uint32_t k = classes.block_count();
  const uint32_t n = space.points();
  // Quotient opens are the class sets whose preimage is open downstairs.
  std::vector<PointSet> opens;
  for (uint64_t bits = 0; bits < (uint64_t{1} << k); ++bits) {
    PointSet preimage(n);
    for (uint32_t c = 0; c < k; ++c)
      if ((bits >> c) & 1) preimage |= classes.blocks()[c];
    if (is_open(space, preimage)) opens.push_back(PointSet::from_mask(k, bits));
  }
  std::vector<PointSet> basis(k, PointSet::full_set(k));
  for (const PointSet& s : opens)
    s.for_each([&](uint32_t c) { basis[c] &= s; });
  return FiniteSpace(k, std::move(basis));
}

FiniteSpace quotient_space_by_fixpoint(const FiniteSpace& space,
                                       const Partition& classes) {
  const uint32_t k = classes.block_count();
  const uint32_t n = space.points();
  std::vector<PointSet> basis;
  basis.reserve(k);
  for (uint32_t c = 0; c < k; ++c) {
    // Grow {c} until the union of its blocks is open downstairs.
    PointSet cls = PointSet::single(k, c);
    bool changed = true;
    while (changed) {
      changed = false;
      PointSet preimage(n);
      cls.for_each([&](uint32_t i) { preimage |= classes.blocks()[i]; });
      preimage.for_each([&](uint32_t x) {
        space.nbhd(x).for_each([&](uint32_t y) {
          if (!cls.test(classes.block_of(y))) {
            cls.set(classes.block_of(y));
            changed = true;
          }
        });
      });
    }
    basis.push_back(std::move(cls));
  }
  return FiniteSpace(k, std::move(basis));
}

}  // namespace detail

QuotientSpace quotient_by_R(const FiniteSpace& space) {
  Partition classes(space.points(), v_equality_classes(space));
  FiniteSpace quotient = classes.block_count() <= 16
                             ? detail::quotient_space_by_preimage(space, classes)
                             : detail::quotient_space_by_fixpoint(space, classes);
  bool discrete = is_discrete(quotient);
  return QuotientSpace{space, std::move(classes), std::move(quotient), discrete};
}

PseudometricMatrix::PseudometricMatrix(uint32_t n, std::vector<double> values)
    : n_(n), d_(std::move(values)) {
  if (n_ == 0) throw std::invalid_argument("pseudometric: point count must be >= 1");
  if (d_.size() != static_cast<size_t>(n_) * n_)
    throw std::invalid_argument("pseudometric: matrix must be n*n");
  for (uint32_t x = 0; x < n_; ++x) {
    if (at(x, x) != 0.0)
      throw std::invalid_argument("pseudometric: nonzero diagonal at " + std::to_string(x));
    for (uint32_t y = 0; y < n_; ++y) {
      if (at(x, y) < 0.0) throw std::invalid_argument("pseudometric: negative value");
      if (at(x, y) != at(y, x))
        throw std::invalid_argument("pseudometric: matrix not symmetric");
    }
  }
  for (uint32_t x = 0; x < n_; ++x)
    for (uint32_t y = 0; y < n_; ++y)
      for (uint32_t z = 0; z < n_; ++z)
        if (at(x, z) > at(x, y) + at(y, z))
          throw std::invalid_argument("pseudometric: triangle inequality fails at (" +
                                      std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(z) + ")");
}

FiniteSpace ball_topology(const PseudometricMatrix& d, double radius) {
  const uint32_t n = d.points();
  // Minimal neighbourhood = intersection of the sub-basic balls containing
  // the point; B(x, r) always contains x.
  std::vector<PointSet> balls;
  balls.reserve(n);
  for (uint32_t x = 0; x < n; ++x) {
    PointSet b(n);
    for (uint32_t y = 0; y < n; ++y)
      if (d.at(x, y) < radius) b.set(y);
    balls.push_back(std::move(b));
  }
  std::vector<PointSet> basis(n, PointSet::full_set(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t c = 0; c < n; ++c)
      if (balls[c].test(x)) basis[x] &= balls[c];
  return FiniteSpace(n, std::move(basis));
}

std::optional<PseudometricMatrix> pseudometric_oracle(const FiniteSpace& space,
                                                      uint32_t bound) {
  const uint32_t n = space.points();
  if (n > bound)
    throw bound_error("pseudometric oracle supports n <= " + std::to_string(bound) +
                      ", got " + std::to_string(n));
  std::optional<PseudometricMatrix> found;
  for_each_partition(n, [&](const Partition& p) {
    if (found) return;
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        if (p.block_of(x) != p.block_of(y)) d[x * n + y] = 1.0;
    PseudometricMatrix m(n, std::move(d));
    if (ball_topology(m) == space) found = std::move(m);
  });
  return found;
}

}  // namespace alextop
