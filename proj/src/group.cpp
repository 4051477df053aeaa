#include "alextop/group.hpp"

#include <stdexcept>

#include "alextop/errors.hpp"

namespace alextop {

namespace {

std::string elem(uint32_t a) { return std::to_string(a); }

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<uint32_t>>& table) {
  FiniteGroup g;
  const uint32_t n = static_cast<uint32_t>(table.size());
  if (n == 0) throw std::invalid_argument("group: order must be >= 1");
  g.order_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (uint32_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw std::invalid_argument("group: table row " + elem(a) + " is not square");
    for (uint32_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw std::invalid_argument("group: entry (" + elem(a) + "," + elem(b) +
                                    ") out of range");
      g.table_[a * n + b] = table[a][b];
    }
  }

  bool has_identity = false;
  for (uint32_t e = 0; e < n && !has_identity; ++e) {
    bool ok = true;
    for (uint32_t a = 0; a < n; ++a)
      if (g.mul(e, a) != a || g.mul(a, e) != a) ok = false;
    if (ok) {
      g.e_ = e;
      has_identity = true;
    }
  }
  if (!has_identity)
    throw std::invalid_argument("group: no two-sided identity element");

  g.inv_.assign(n, n);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.e_ && g.mul(b, a) == g.e_) g.inv_[a] = b;
    if (g.inv_[a] == n)
      throw std::invalid_argument("group: element " + elem(a) +
                                  " has no two-sided inverse");
  }

  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      for (uint32_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("group: associativity fails on triple (" +
                                      elem(a) + "," + elem(b) + "," + elem(c) + ")");
  return g;
}

std::vector<std::vector<uint32_t>> FiniteGroup::table_rows() const {
  std::vector<std::vector<uint32_t>> rows(order_, std::vector<uint32_t>(order_));
  for (uint32_t a = 0; a < order_; ++a)
    for (uint32_t b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

FiniteGroup cyclic_group(uint32_t m) {
  std::vector<std::vector<uint32_t>> t(m, std::vector<uint32_t>(m));
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup::from_table(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const uint32_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup::from_table(t);
}

FiniteGroup symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order; composition
  // (p*q)(x) = p(q(x)).
  const uint32_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const uint32_t p[3]) {
    for (uint32_t i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return 6u;
  };
  std::vector<std::vector<uint32_t>> t(6, std::vector<uint32_t>(6));
  for (uint32_t i = 0; i < 6; ++i)
    for (uint32_t j = 0; j < 6; ++j) {
      uint32_t comp[3];
      for (uint32_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group_4() {
  // Element (a,k) = s^a r^k with index a*4 + k; s r s = r^-1.
  auto idx = [](uint32_t a, uint32_t k) { return a * 4 + (k & 3); };
  std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
  for (uint32_t a1 = 0; a1 < 2; ++a1)
    for (uint32_t k1 = 0; k1 < 4; ++k1)
      for (uint32_t a2 = 0; a2 < 2; ++a2)
        for (uint32_t k2 = 0; k2 < 4; ++k2)
          t[idx(a1, k1)][idx(a2, k2)] =
              a2 == 0 ? idx(a1, k1 + k2) : idx(a1 ^ 1, k2 + 4 - k1);
  return FiniteGroup::from_table(t);
}

FiniteGroup quaternion_group() {
  // Units 0:1, 1:i, 2:j, 3:k; element index = unit*2 + sign (0:+, 1:-).
  auto mul_unit = [](uint32_t s1, uint32_t u1, uint32_t s2, uint32_t u2) {
    uint32_t sign = s1 ^ s2, unit;
    if (u1 == 0)
      unit = u2;
    else if (u2 == 0)
      unit = u1;
    else if (u1 == u2) {
      unit = 0;
      sign ^= 1;
    } else {
      unit = 6 - u1 - u2;
      if (u2 != u1 % 3 + 1) sign ^= 1;  // against the cyclic order i->j->k
    }
    return unit * 2 + sign;
  };
  std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
  for (uint32_t x = 0; x < 8; ++x)
    for (uint32_t y = 0; y < 8; ++y)
      t[x][y] = mul_unit(x & 1, x / 2, y & 1, y / 2);
  return FiniteGroup::from_table(t);
}

std::vector<NamedGroup> builtin_groups() {
  std::vector<NamedGroup> out;
  auto numeric_labels = [](uint32_t m) {
    std::vector<std::string> l;
    for (uint32_t i = 0; i < m; ++i) l.push_back(std::to_string(i));
    return l;
  };
  out.push_back({"z2", cyclic_group(2), numeric_labels(2)});
  out.push_back({"z3", cyclic_group(3), numeric_labels(3)});
  out.push_back({"z4", cyclic_group(4), numeric_labels(4)});
  out.push_back({"z2xz2", direct_product(cyclic_group(2), cyclic_group(2)),
                 {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}});
  out.push_back({"z6", cyclic_group(6), numeric_labels(6)});
  out.push_back({"s3", symmetric_group_3(), {"012", "021", "102", "120", "201", "210"}});
  out.push_back({"z8", cyclic_group(8), numeric_labels(8)});
  out.push_back({"d4", dihedral_group_4(),
                 {"r0", "r1", "r2", "r3", "s", "sr", "sr2", "sr3"}});
  out.push_back({"q8", quaternion_group(),
                 {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}});
  return out;
}

namespace {

void check_normal_subgroup(const FiniteGroup& g, const PointSet& set) {
  if (set.universe() != g.order())
    throw std::invalid_argument("subgroup: universe mismatch");
  if (!set.test(g.identity()))
    throw std::invalid_argument("subgroup: missing the identity " +
                                elem(g.identity()));
  bool ok = true;
  std::string why;
  set.for_each([&](uint32_t a) {
    if (!ok) return;
    set.for_each([&](uint32_t b) {
      if (ok && !set.test(g.mul(a, b))) {
        ok = false;
        why = "subgroup: not closed under product: " + elem(a) + "*" + elem(b) +
              " = " + elem(g.mul(a, b)) + " is outside";
      }
    });
    if (ok && !set.test(g.inv(a))) {
      ok = false;
      why = "subgroup: missing inverse of " + elem(a);
    }
  });
  if (!ok) throw std::invalid_argument(why);
  for (uint32_t x = 0; x < g.order(); ++x) {
    bool normal = true;
    uint32_t witness = 0;
    set.for_each([&](uint32_t h) {
      uint32_t conj = g.mul(g.mul(x, h), g.inv(x));
      if (normal && !set.test(conj)) {
        normal = false;
        witness = h;
      }
    });
    if (!normal)
      throw std::invalid_argument("subgroup: not normal: conjugate of " +
                                  elem(witness) + " by " + elem(x) + " escapes");
  }
}

}  // namespace

bool is_normal_subgroup(const FiniteGroup& g, const PointSet& candidate) {
  try {
    check_normal_subgroup(g, candidate);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<PointSet> normal_subgroups(const FiniteGroup& g) {
  if (g.order() > 16)
    throw bound_error("normal-subgroup enumeration supports order <= 16");
  std::vector<PointSet> out;
  for (uint64_t bits = 1; bits < (uint64_t{1} << g.order()); ++bits) {
    PointSet set = PointSet::from_mask(g.order(), bits);
    if (is_normal_subgroup(g, set)) out.push_back(std::move(set));
  }
  return out;
}

GroupWithTopology coset_topology(const FiniteGroup& g, const PointSet& normal_subgroup) {
  check_normal_subgroup(g, normal_subgroup);
  const uint32_t n = g.order();
  std::vector<PointSet> basis(n, PointSet(n));
  PointSet seen(n);
  for (uint32_t x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    PointSet coset(n);
    normal_subgroup.for_each([&](uint32_t h) { coset.set(g.mul(x, h)); });
    coset.for_each([&](uint32_t y) {
      basis[y] = coset;
      seen.set(y);
    });
  }
  return GroupWithTopology{g, FiniteSpace(n, std::move(basis))};
}

bool multiplication_continuous(const GroupWithTopology& gt) {
  const FiniteGroup& g = gt.group;
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b) {
      bool inside = true;
      gt.space.nbhd(a).for_each([&](uint32_t x) {
        gt.space.nbhd(b).for_each([&](uint32_t y) {
          if (!gt.space.nbhd(g.mul(a, b)).test(g.mul(x, y))) inside = false;
        });
      });
      if (!inside) return false;
    }
  return true;
}

bool inversion_continuous(const GroupWithTopology& gt) {
  const FiniteGroup& g = gt.group;
  for (uint32_t a = 0; a < g.order(); ++a) {
    bool inside = true;
    gt.space.nbhd(a).for_each([&](uint32_t x) {
      if (!gt.space.nbhd(g.inv(a)).test(g.inv(x))) inside = false;
    });
    if (!inside) return false;
  }
  return true;
}

bool translate_property(const GroupWithTopology& gt) {
  const FiniteGroup& g = gt.group;
  const PointSet& v_e = gt.space.nbhd(g.identity());
  for (uint32_t a = 0; a < g.order(); ++a) {
    PointSet translated(g.order());
    v_e.for_each([&](uint32_t h) { translated.set(g.mul(a, h)); });
    if (translated != gt.space.nbhd(a)) return false;
  }
  return true;
}

ProductDecomposition product_decomposition(const GroupWithTopology& gt) {
  const FiniteGroup& g = gt.group;
  const uint32_t n = g.order();
  const PointSet& v_e = gt.space.nbhd(g.identity());
  if (v_e.count() < 2)
    throw edge_case_error(
        "decomposition needs |V(e)| >= 2; a discrete group has no non-discrete factor");

  ProductDecomposition d{subspace(gt.space, v_e),
                         quotient_by_R(gt.space).quotient,
                         v_e.to_indices(),
                         {},
                         {},
                         {}};
  std::vector<PointSet> cosets = v_equality_classes(gt.space);
  for (const PointSet& coset : cosets) d.block_reps.push_back(coset.min());

  const uint32_t he = static_cast<uint32_t>(d.e_points.size());
  const uint32_t kc = static_cast<uint32_t>(cosets.size());
  d.phi.assign(he, std::vector<uint32_t>(kc));
  for (uint32_t h = 0; h < he; ++h)
    for (uint32_t c = 0; c < kc; ++c)
      d.phi[h][c] = g.mul(d.block_reps[c], d.e_points[h]);

  PointSet image(n);
  bool repeats = false;
  for (const auto& row : d.phi)
    for (uint32_t value : row) {
      if (image.test(value)) repeats = true;
      image.set(value);
    }
  d.checks.one_to_one = !repeats;
  d.checks.onto = image.is_full();

  // phi as a point map from E x F (pair (h,c) -> index h*kc + c) to G,
  // checked over every open set on both sides.
  FiniteSpace prod = product_space(d.E, d.F);
  auto apply = [&](const PointSet& w) {
    PointSet out(n);
    w.for_each([&](uint32_t p) { out.set(d.phi[p / kc][p % kc]); });
    return out;
  };
  auto preimage = [&](const PointSet& u) {
    PointSet out(prod.points());
    for (uint32_t h = 0; h < he; ++h)
      for (uint32_t c = 0; c < kc; ++c)
        if (u.test(d.phi[h][c])) out.set(h * kc + c);
    return out;
  };
  d.checks.open_map = true;
  for (const PointSet& w : open_sets(prod).sets)
    if (!is_open(gt.space, apply(w))) d.checks.open_map = false;
  d.checks.continuous = true;
  for (const PointSet& u : open_sets(gt.space).sets)
    if (!is_open(prod, preimage(u))) d.checks.continuous = false;
  return d;
}

Zahra10Report check_zahra10(const GroupWithTopology& gt) {
  const FiniteGroup& g = gt.group;
  Zahra10Report r;
  r.translate_property = translate_property(gt);
  r.v_e_open = is_open(gt.space, gt.space.nbhd(g.identity()));

  const PointSet& v_e = gt.space.nbhd(g.identity());
  r.coset_relation_matches = true;
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b) {
      bool same_v = gt.space.nbhd(a) == gt.space.nbhd(b);
      bool same_coset = v_e.test(g.mul(g.inv(b), a));
      if (same_v != same_coset) r.coset_relation_matches = false;
    }

  r.decomposition_applicable = v_e.count() >= 2;
  r.agree = r.translate_property && r.v_e_open && r.coset_relation_matches;
  if (r.decomposition_applicable) {
    r.decomposition = product_decomposition(gt);
    r.e_non_discrete = !is_discrete(r.decomposition->E);
    r.f_discrete = is_discrete(r.decomposition->F);
    r.agree = r.agree && r.decomposition->checks.all() && r.e_non_discrete &&
              r.f_discrete;
  }
  return r;
}

Zahra20Report check_zahra20(const GroupWithTopology& gt) {
  Zahra20Report r;
  const PointSet& v_e = gt.space.nbhd(gt.group.identity());
  r.v_e_open_and_finite = is_open(gt.space, v_e);
  r.generating_map = find_generating_map(gt.space, MapSearch::characterize);
  r.functional_alexandroff = r.generating_map.has_value();
  QuotientSpace q = quotient_by_R(gt.space);
  r.f_discrete_and_finite = q.discrete;
  r.agree = r.v_e_open_and_finite && r.functional_alexandroff && r.f_discrete_and_finite;
  return r;
}

}  // namespace alextop
