#include "alextop/space.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace alextop {

FiniteSpace::FiniteSpace(uint32_t n, std::vector<PointSet> min_nbhd)
    : n_(n), min_nbhd_(std::move(min_nbhd)) {
  if (n_ == 0) throw std::invalid_argument("space: point count must be >= 1");
  if (min_nbhd_.size() != n_)
    throw std::invalid_argument("space: basis must have one set per point");
  for (uint32_t x = 0; x < n_; ++x) {
    if (min_nbhd_[x].universe() != n_)
      throw std::invalid_argument("space: basis set universe mismatch at point " +
                                  std::to_string(x));
    if (!min_nbhd_[x].test(x))
      throw std::invalid_argument("space: point " + std::to_string(x) +
                                  " is missing from its own minimal neighbourhood");
  }
  for (uint32_t x = 0; x < n_; ++x) {
    bool ok = true;
    uint32_t bad = 0;
    min_nbhd_[x].for_each([&](uint32_t y) {
      if (ok && !min_nbhd_[y].subset_of(min_nbhd_[x])) {
        ok = false;
        bad = y;
      }
    });
    if (!ok)
      throw std::invalid_argument("space: incoherent basis: " + std::to_string(bad) +
                                  " lies in V(" + std::to_string(x) + ") but V(" +
                                  std::to_string(bad) + ") is not contained in it");
  }
}

FiniteSpace FiniteSpace::discrete(uint32_t n) {
  std::vector<PointSet> basis;
  basis.reserve(n);
  for (uint32_t x = 0; x < n; ++x) basis.push_back(PointSet::single(n, x));
  return FiniteSpace(n, std::move(basis));
}

FiniteSpace FiniteSpace::indiscrete(uint32_t n) {
  return FiniteSpace(n, std::vector<PointSet>(n, PointSet::full_set(n)));
}

FiniteSpace from_open_sets(const OpenSetFamily& family) {
  const uint32_t n = family.n;
  if (n == 0) throw std::invalid_argument("open sets: point count must be >= 1");
  std::set<PointSet> sets;
  for (const PointSet& s : family.sets) {
    if (s.universe() != n)
      throw std::invalid_argument("open sets: member universe mismatch");
    sets.insert(s);
  }
  if (!sets.count(PointSet(n)))
    throw std::invalid_argument("open sets: family does not contain the empty set");
  if (!sets.count(PointSet::full_set(n)))
    throw std::invalid_argument("open sets: family does not contain the full set");
  for (const PointSet& a : sets)
    for (const PointSet& b : sets) {
      if (!(a < b)) continue;
      if (!sets.count(a | b))
        throw std::invalid_argument("open sets: family is not closed under union: " +
                                    a.to_string() + " | " + b.to_string());
      if (!sets.count(a & b))
        throw std::invalid_argument(
            "open sets: family is not closed under intersection: " + a.to_string() +
            " & " + b.to_string());
    }

  std::vector<PointSet> basis(n, PointSet::full_set(n));
  for (const PointSet& s : sets)
    s.for_each([&](uint32_t x) { basis[x] &= s; });
  return FiniteSpace(n, std::move(basis));
}

OpenSetFamily open_sets(const FiniteSpace& space) {
  const uint32_t n = space.points();
  std::set<PointSet> opens;
  std::deque<PointSet> todo;
  opens.insert(PointSet(n));
  todo.push_back(PointSet(n));
  while (!todo.empty()) {
    PointSet u = todo.front();
    todo.pop_front();
    for (uint32_t x = 0; x < n; ++x) {
      PointSet w = u | space.nbhd(x);
      if (opens.insert(w).second) todo.push_back(w);
    }
  }
  OpenSetFamily fam;
  fam.n = n;
  fam.sets.assign(opens.begin(), opens.end());
  return fam;
}

SpecializationPreorder preorder(const FiniteSpace& space) {
  const uint32_t n = space.points();
  Relation leq(n);
  for (uint32_t y = 0; y < n; ++y)
    space.nbhd(y).for_each([&](uint32_t x) { leq.set(x, y); });
  return SpecializationPreorder{std::move(leq)};
}

FiniteSpace space_from_preorder(const SpecializationPreorder& p) {
  const uint32_t n = p.leq.points();
  if (n == 0) throw std::invalid_argument("preorder: point count must be >= 1");
  if (!p.leq.reflexive())
    throw std::invalid_argument("preorder: relation is not reflexive");
  if (!p.leq.transitive())
    throw std::invalid_argument("preorder: relation is not transitive");
  Relation cols = p.leq.transposed();
  std::vector<PointSet> basis;
  basis.reserve(n);
  for (uint32_t y = 0; y < n; ++y) basis.push_back(cols.row(y));
  return FiniteSpace(n, std::move(basis));
}

bool is_open(const FiniteSpace& space, const PointSet& set) {
  bool open = true;
  set.for_each([&](uint32_t x) {
    if (!space.nbhd(x).subset_of(set)) open = false;
  });
  return open;
}

bool is_discrete(const FiniteSpace& space) {
  for (uint32_t x = 0; x < space.points(); ++x)
    if (space.nbhd(x).count() != 1) return false;
  return true;
}

bool is_indiscrete(const FiniteSpace& space) {
  for (uint32_t x = 0; x < space.points(); ++x)
    if (!space.nbhd(x).is_full()) return false;
  return true;
}

std::vector<PointSet> v_equality_classes(const FiniteSpace& space) {
  const uint32_t n = space.points();
  std::vector<PointSet> classes;
  std::vector<bool> seen(n, false);
  for (uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    PointSet cls(n);
    for (uint32_t y = x; y < n; ++y)
      if (!seen[y] && space.nbhd(y) == space.nbhd(x)) {
        cls.set(y);
        seen[y] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::pair<uint32_t, uint32_t>> reduced_edges(const FiniteSpace& space) {
  std::vector<PointSet> classes = v_equality_classes(space);
  const size_t k = classes.size();
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  for (const PointSet& cls : classes) {
    std::vector<uint32_t> pts = cls.to_indices();
    if (pts.size() < 2) continue;
    for (size_t i = 0; i < pts.size(); ++i)
      edges.emplace_back(pts[i], pts[(i + 1) % pts.size()]);
  }

  // Covering edges between classes: i -> j when V_i is strictly below V_j
  // with nothing in between.
  auto v_of = [&](size_t i) -> const PointSet& { return space.nbhd(classes[i].min()); };
  auto strictly_below = [&](size_t i, size_t j) {
    return v_of(i).subset_of(v_of(j)) && v_of(i) != v_of(j);
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (!strictly_below(i, j)) continue;
      bool covering = true;
      for (size_t m = 0; m < k && covering; ++m)
        if (m != i && m != j && strictly_below(i, m) && strictly_below(m, j))
          covering = false;
      if (covering) edges.emplace_back(classes[i].min(), classes[j].min());
    }
  return edges;
}

std::string to_dot(const FiniteSpace& space, const std::vector<std::string>* labels) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string dot = "digraph space {\n  rankdir=BT;\n";
  for (uint32_t x = 0; x < space.points(); ++x) {
    dot += "  " + std::to_string(x);
    if (labels && x < labels->size())
      dot += " [label=\"" + escape((*labels)[x]) + "\"]";
    dot += ";\n";
  }
  for (auto [a, b] : reduced_edges(space))
    dot += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  dot += "}\n";
  return dot;
}

FiniteSpace subspace(const FiniteSpace& space, const PointSet& points) {
  std::vector<uint32_t> pts = points.to_indices();
  const uint32_t m = static_cast<uint32_t>(pts.size());
  if (m == 0) throw std::invalid_argument("subspace: point set must be nonempty");
  std::vector<uint32_t> pos(space.points(), 0);
  for (uint32_t i = 0; i < m; ++i) pos[pts[i]] = i;
  std::vector<PointSet> basis(m, PointSet(m));
  for (uint32_t i = 0; i < m; ++i) {
    PointSet cut = space.nbhd(pts[i]) & points;
    cut.for_each([&](uint32_t y) { basis[i].set(pos[y]); });
  }
  return FiniteSpace(m, std::move(basis));
}

FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b) {
  const uint32_t na = a.points(), nb = b.points(), n = na * nb;
  std::vector<PointSet> basis(n, PointSet(n));
  for (uint32_t x = 0; x < na; ++x)
    for (uint32_t y = 0; y < nb; ++y) {
      PointSet& v = basis[x * nb + y];
      a.nbhd(x).for_each([&](uint32_t p) {
        b.nbhd(y).for_each([&](uint32_t q) { v.set(p * nb + q); });
      });
    }
  return FiniteSpace(n, std::move(basis));
}

}  // namespace alextop
