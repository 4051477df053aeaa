#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alextop/funcmap.hpp"
#include "alextop/pointset.hpp"
#include "alextop/space.hpp"
#include "alextop/uniform.hpp"

namespace alextop {

/// Finite group presented by a Cayley table over element ids {0..order-1}.
class FiniteGroup {
 public:
  /// Validates the table (identity, two-sided inverses, associativity) and
  /// throws std::invalid_argument naming the violated axiom and a witness.
  static FiniteGroup from_table(const std::vector<std::vector<uint32_t>>& table);

  uint32_t order() const { return order_; }
  uint32_t identity() const { return e_; }
  uint32_t mul(uint32_t a, uint32_t b) const { return table_[a * order_ + b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  std::vector<std::vector<uint32_t>> table_rows() const;

 private:
  FiniteGroup() = default;
  uint32_t order_ = 0;
  uint32_t e_ = 0;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> inv_;
};

FiniteGroup cyclic_group(uint32_t m);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group_3();
FiniteGroup dihedral_group_4();   // order 8
FiniteGroup quaternion_group();   // order 8

struct NamedGroup {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> labels;
};

/// The bundled corpus: z2, z3, z4, z2xz2, z6, s3, z8, d4, q8.
std::vector<NamedGroup> builtin_groups();

/// True iff the subset is a subgroup stable under conjugation.
bool is_normal_subgroup(const FiniteGroup& g, const PointSet& candidate);

/// All normal subgroups, ascending as bit values. Order capped at 16.
std::vector<PointSet> normal_subgroups(const FiniteGroup& g);

struct GroupWithTopology {
  FiniteGroup group;
  FiniteSpace space;
};

/// Partition topology of the left cosets of N. Rejects subsets that are not
/// normal subgroups, naming the violating elements.
GroupWithTopology coset_topology(const FiniteGroup& g, const PointSet& normal_subgroup);

bool multiplication_continuous(const GroupWithTopology& gt);  // V(g)V(h) in V(gh)
bool inversion_continuous(const GroupWithTopology& gt);       // V(g)^-1 in V(g^-1)
bool translate_property(const GroupWithTopology& gt);         // V(g) = g V(e)

struct HomeoChecks {
  bool one_to_one = false;
  bool onto = false;
  bool continuous = false;
  bool open_map = false;
  bool all() const { return one_to_one && onto && continuous && open_map; }
};

/// G as a product of the block E = V(e) (subspace topology) with the discrete
/// coset space F, glued by phi(h, D) = rep(D) * h. Representatives are the
/// smallest element of each coset. Throws edge_case_error when |V(e)| = 1,
/// where the non-discreteness premise of E fails.
struct ProductDecomposition {
  FiniteSpace E;
  FiniteSpace F;
  std::vector<uint32_t> e_points;    // elements of V(e), ascending; E's point i
  std::vector<uint32_t> block_reps;  // rep per coset, coset order by min element
  std::vector<std::vector<uint32_t>> phi;  // phi[h_index][coset_index] -> element
  HomeoChecks checks;
};

ProductDecomposition product_decomposition(const GroupWithTopology& gt);

struct Zahra10Report {
  bool translate_property = false;       // V(g) = g V(e) for every g
  bool v_e_open = false;                 // V(e) open
  bool coset_relation_matches = false;   // V(g)=V(h) iff h^-1 g in V(e)
  bool decomposition_applicable = false; // |V(e)| >= 2
  std::optional<ProductDecomposition> decomposition;
  bool e_non_discrete = false;           // when applicable
  bool f_discrete = false;               // when applicable
  bool agree = false;                    // every evaluated statement holds
};

Zahra10Report check_zahra10(const GroupWithTopology& gt);

struct Zahra20Report {
  bool v_e_open_and_finite = false;
  bool functional_alexandroff = false;
  std::optional<SelfMap> generating_map;
  bool f_discrete_and_finite = false;
  bool agree = false;
};

Zahra20Report check_zahra20(const GroupWithTopology& gt);

}  // namespace alextop
