#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alextop/pointset.hpp"
#include "alextop/relation.hpp"

namespace alextop {

/// A topology on the points {0..n-1}, stored as its minimal-neighbourhood
/// basis: nbhd(x) is the smallest open set containing x. Valid bases satisfy
/// x in V(x) and (y in V(x) implies V(y) subset of V(x)); every finite
/// topology arises this way.
class FiniteSpace {
 public:
  /// Validates the basis; throws std::invalid_argument naming the violation.
  FiniteSpace(uint32_t n, std::vector<PointSet> min_nbhd);

  static FiniteSpace discrete(uint32_t n);
  static FiniteSpace indiscrete(uint32_t n);

  uint32_t points() const { return n_; }
  const PointSet& nbhd(uint32_t x) const { return min_nbhd_[x]; }
  const std::vector<PointSet>& basis() const { return min_nbhd_; }

  bool operator==(const FiniteSpace& o) const {
    return n_ == o.n_ && min_nbhd_ == o.min_nbhd_;
  }
  bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

 private:
  uint32_t n_;
  std::vector<PointSet> min_nbhd_;
};

/// A topology presented as its family of open sets.
struct OpenSetFamily {
  uint32_t n = 0;
  std::vector<PointSet> sets;
};

/// leq(x,y) iff x lies in every open set containing y, i.e. x in V(y).
struct SpecializationPreorder {
  Relation leq;
};

/// V(x) = intersection of all family members containing x. Rejects families
/// missing the empty or full set or not closed under pairwise union and
/// intersection.
FiniteSpace from_open_sets(const OpenSetFamily& family);

/// All open sets (unions of basis elements), sorted ascending as bit values.
/// Output size is the topology's size; intended for small point counts.
OpenSetFamily open_sets(const FiniteSpace& space);

SpecializationPreorder preorder(const FiniteSpace& space);

/// Inverse of preorder(); rejects relations that are not reflexive and
/// transitive.
FiniteSpace space_from_preorder(const SpecializationPreorder& p);

bool is_open(const FiniteSpace& space, const PointSet& set);
bool is_discrete(const FiniteSpace& space);
bool is_indiscrete(const FiniteSpace& space);

/// Classes of the relation V(x) = V(y), ordered by smallest member.
std::vector<PointSet> v_equality_classes(const FiniteSpace& space);

/// Edges of the reduced preorder drawing: one cycle through each V-equality
/// class of size >= 2 plus covering edges between classes. The reflexive-
/// transitive closure of these edges is exactly the specialization preorder.
std::vector<std::pair<uint32_t, uint32_t>> reduced_edges(const FiniteSpace& space);

/// DOT rendering of reduced_edges with one node per point.
std::string to_dot(const FiniteSpace& space,
                   const std::vector<std::string>* labels = nullptr);

/// Subspace on the given points, reindexed ascending.
FiniteSpace subspace(const FiniteSpace& space, const PointSet& points);

/// Product topology; pair (x,y) gets index x * b.points() + y.
FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace alextop
