#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "alextop/relation.hpp"
#include "alextop/space.hpp"

namespace alextop {

/// Disjoint nonempty blocks covering {0..n-1}, ordered by smallest member.
class Partition {
 public:
  Partition(uint32_t n, std::vector<PointSet> blocks);

  static Partition singletons(uint32_t n);
  /// block_index[x] = id of the block containing x (ids need not be dense).
  static Partition from_block_index(uint32_t n, const std::vector<uint32_t>& block_index);

  uint32_t points() const { return n_; }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  uint32_t block_count() const { return static_cast<uint32_t>(blocks_.size()); }
  uint32_t block_of(uint32_t x) const { return block_of_[x]; }
  const PointSet& block_containing(uint32_t x) const { return blocks_[block_of_[x]]; }

  bool operator==(const Partition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  uint32_t n_;
  std::vector<PointSet> blocks_;
  std::vector<uint32_t> block_of_;
};

/// Base relation of a uniform structure presented as the up-filter
/// { alpha : alpha0 subset of alpha }. A base is well formed when alpha0
/// contains the diagonal, is symmetric, and is idempotent under composition.
struct EntourageBase {
  Relation alpha0;
};

struct UniformAxiomReport {
  bool diagonal_contained = false;   // diagonal inside alpha0, hence inside every member
  bool upward_closed = false;        // holds structurally for an up-filter
  bool intersection_closed = false;  // holds structurally for an up-filter
  bool inverse_closed = false;       // alpha0 symmetric
  bool has_half_refinement = false;  // alpha0 o alpha0 subset of alpha0
  bool all_pass() const {
    return diagonal_contained && upward_closed && intersection_closed &&
           inverse_closed && has_half_refinement;
  }
};

struct UniformizabilityVerdict {
  bool uniformizable = false;
  std::optional<Partition> witness;  // the distinct minimal neighbourhoods
  // Smallest pair (a,b) with b in V(a) but V(b) != V(a).
  std::optional<std::pair<uint32_t, uint32_t>> counterexample;
};

/// Symmetric matrix with zero diagonal satisfying the triangle inequality.
class PseudometricMatrix {
 public:
  PseudometricMatrix(uint32_t n, std::vector<double> values);  // row-major n*n
  uint32_t points() const { return n_; }
  double at(uint32_t x, uint32_t y) const { return d_[x * n_ + y]; }

 private:
  uint32_t n_;
  std::vector<double> d_;
};

struct QuotientSpace {
  FiniteSpace base;
  Partition classes;     // by V-equality
  FiniteSpace quotient;  // on class ids
  bool discrete = false;
};

/// Yes iff the minimal neighbourhoods form a partition; carries the witness
/// partition or the smallest violating pair.
UniformizabilityVerdict decide_uniformizable(const FiniteSpace& space);

/// alpha0 = union of D x D over the blocks.
EntourageBase entourage_base_from_partition(const Partition& p);

/// Checks the five uniform-structure axioms for the up-filter of alpha0.
/// Failures are report content, not errors.
UniformAxiomReport verify_uniform_axioms(const Relation& alpha0);

/// Space with V(x) = alpha0[x]; rejects bases violating the EntourageBase
/// invariants.
FiniteSpace topology_from_entourage(const EntourageBase& base);

/// True iff { (a,b) : V(b) subset of V(a) } is symmetric (it is always
/// reflexive and transitive).
bool leq_relation_is_equivalence(const FiniteSpace& space);

QuotientSpace quotient_by_R(const FiniteSpace& space);

inline constexpr uint32_t kDefaultOracleBound = 6;

/// Exhaustive search over {0,1}-valued pseudometrics (one per set partition)
/// for one whose radius-1/2 ball topology equals the space. Independent of
/// decide_uniformizable by construction. Throws bound_error when
/// space.points() exceeds the bound.
std::optional<PseudometricMatrix> pseudometric_oracle(
    const FiniteSpace& space, uint32_t bound = kDefaultOracleBound);

/// Topology whose sub-base is the set of open balls B(x, radius).
FiniteSpace ball_topology(const PseudometricMatrix& d, double radius = 0.5);

namespace detail {
// Both routes compute the quotient; the subset-enumeration route follows the
// open-preimage definition directly and is used as the test oracle.
FiniteSpace quotient_space_by_preimage(const FiniteSpace& space,
                                       const Partition& classes);
FiniteSpace quotient_space_by_fixpoint(const FiniteSpace& space,
                                       const Partition& classes);
}  // namespace detail

}  // namespace alextop
