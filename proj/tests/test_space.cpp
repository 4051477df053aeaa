#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "alextop/generators.hpp"
#include "alextop/space.hpp"

using namespace alextop;

namespace {

FiniteSpace make_space(uint32_t n, std::vector<std::vector<uint32_t>> basis) {
  std::vector<PointSet> sets;
  for (const auto& b : basis) sets.push_back(PointSet::from_indices(n, b));
  return FiniteSpace(n, std::move(sets));
}

FiniteSpace sierpinski() { return make_space(2, {{0}, {0, 1}}); }

OpenSetFamily family_of(uint32_t n, std::vector<std::vector<uint32_t>> sets) {
  OpenSetFamily fam;
  fam.n = n;
  for (const auto& s : sets) fam.sets.push_back(PointSet::from_indices(n, s));
  return fam;
}

// Count of valid minimal-neighbourhood tuples, by filtering every tuple of
// point sets with x in V(x).
uint64_t count_spaces_brute(uint32_t n) {
  std::vector<uint64_t> rows(n, 0);
  uint64_t count = 0;
  const uint64_t options = uint64_t{1} << (n - 1);
  std::vector<uint64_t> choice(n, 0);
  while (true) {
    for (uint32_t x = 0; x < n; ++x) {
      // spread choice bits around the mandatory self bit
      uint64_t low = choice[x] & ((uint64_t{1} << x) - 1);
      uint64_t high = (choice[x] >> x) << (x + 1);
      rows[x] = low | high | (uint64_t{1} << x);
    }
    bool coherent = true;
    for (uint32_t x = 0; x < n && coherent; ++x)
      for (uint32_t y = 0; y < n && coherent; ++y)
        if ((rows[x] >> y) & 1)
          if (rows[y] & ~rows[x]) coherent = false;
    if (coherent) ++count;
    uint32_t i = n;
    while (i > 0 && choice[i - 1] + 1 == options) choice[--i] = 0;
    if (i == 0) return count;
    ++choice[i - 1];
  }
}

// Count of reflexive-transitive boolean matrices, by filtering all
// off-diagonal patterns.
uint64_t count_preorders_brute(uint32_t n) {
  const uint32_t off = n * n - n;
  uint64_t count = 0;
  for (uint64_t bits = 0; bits < (uint64_t{1} << off); ++bits) {
    std::vector<uint64_t> rows(n, 0);
    uint32_t k = 0;
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y) {
        if (x == y)
          rows[x] |= uint64_t{1} << y;
        else if ((bits >> k++) & 1)
          rows[x] |= uint64_t{1} << y;
      }
    bool transitive = true;
    for (uint32_t x = 0; x < n && transitive; ++x)
      for (uint32_t y = 0; y < n && transitive; ++y)
        if ((rows[x] >> y) & 1)
          if (rows[y] & ~rows[x]) transitive = false;
    if (transitive) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("point sets work across the 64-bit word boundary") {
  PointSet s(130);
  s.set(0);
  s.set(70);
  s.set(129);
  CHECK(s.count() == 3);
  CHECK(s.test(70));
  CHECK_FALSE(s.test(71));
  CHECK(s.min() == 0);
  CHECK(s.to_indices() == std::vector<uint32_t>{0, 70, 129});
  CHECK(s.subset_of(PointSet::full_set(130)));
  CHECK_FALSE(PointSet::full_set(130).subset_of(s));
  PointSet t(130);
  t.set(70);
  CHECK(t.subset_of(s));
  CHECK((s & t) == t);
  CHECK((s | t) == s);
}

TEST_CASE("space constructor rejects bad bases") {
  CHECK_THROWS_AS(FiniteSpace(0, {}), std::invalid_argument);
  // 0 missing from V(0)
  CHECK_THROWS_AS(make_space(2, {{1}, {0, 1}}), std::invalid_argument);
  // 1 in V(0) but V(1) not contained in V(0)
  CHECK_THROWS_AS(make_space(3, {{0, 1}, {1, 2}, {2}}), std::invalid_argument);
}

TEST_CASE("from_open_sets computes minimal neighbourhoods by intersection") {
  FiniteSpace s = from_open_sets(family_of(2, {{}, {0}, {0, 1}}));
  CHECK(s.nbhd(0) == PointSet::of(2, {0}));
  CHECK(s.nbhd(1) == PointSet::of(2, {0, 1}));

  FiniteSpace one = from_open_sets(family_of(1, {{}, {0}}));
  CHECK(one.nbhd(0) == PointSet::of(1, {0}));

  FiniteSpace disc = from_open_sets(
      family_of(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  CHECK(disc == FiniteSpace::discrete(3));
}

TEST_CASE("from_open_sets rejects malformed families") {
  CHECK_THROWS_AS(from_open_sets(family_of(2, {{0}, {0, 1}})),
                  std::invalid_argument);  // no empty set
  CHECK_THROWS_AS(from_open_sets(family_of(2, {{}, {0}})),
                  std::invalid_argument);  // no full set
  CHECK_THROWS_AS(from_open_sets(family_of(3, {{}, {0}, {1}, {0, 1, 2}})),
                  std::invalid_argument);  // {0}|{1} missing
  CHECK_THROWS_AS(from_open_sets(family_of(3, {{}, {0, 1}, {1, 2}, {0, 1, 2}})),
                  std::invalid_argument);  // {0,1}&{1,2} missing
  CHECK_THROWS_AS(from_open_sets(OpenSetFamily{}), std::invalid_argument);  // n = 0
}

TEST_CASE("open_sets lists the whole topology") {
  OpenSetFamily disc = open_sets(FiniteSpace::discrete(2));
  CHECK(disc.sets.size() == 4);

  OpenSetFamily indisc = open_sets(FiniteSpace::indiscrete(2));
  REQUIRE(indisc.sets.size() == 2);
  CHECK(indisc.sets[0] == PointSet(2));
  CHECK(indisc.sets[1] == PointSet::full_set(2));

  OpenSetFamily sier = open_sets(sierpinski());
  REQUIRE(sier.sets.size() == 3);
  CHECK(sier.sets[0] == PointSet(2));
  CHECK(sier.sets[1] == PointSet::of(2, {0}));
  CHECK(sier.sets[2] == PointSet::of(2, {0, 1}));
}

TEST_CASE("open-set round trips are identities") {
  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      OpenSetFamily fam = open_sets(s);
      CHECK(from_open_sets(fam) == s);
      // V(x) recomputed directly as the intersection of opens containing x
      for (uint32_t x = 0; x < n; ++x) {
        PointSet inter = PointSet::full_set(n);
        for (const PointSet& u : fam.sets)
          if (u.test(x)) inter &= u;
        CHECK(inter == s.nbhd(x));
      }
    });
}

TEST_CASE("preorder encodes membership in minimal neighbourhoods") {
  SpecializationPreorder disc = preorder(FiniteSpace::discrete(3));
  CHECK(disc.leq == Relation::diagonal(3));

  SpecializationPreorder indisc = preorder(FiniteSpace::indiscrete(3));
  CHECK(indisc.leq == Relation::full(3));

  SpecializationPreorder sier = preorder(sierpinski());
  CHECK(sier.leq.test(0, 0));
  CHECK(sier.leq.test(1, 1));
  CHECK(sier.leq.test(0, 1));
  CHECK_FALSE(sier.leq.test(1, 0));
}

TEST_CASE("space_from_preorder round trips and validates") {
  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      CHECK(space_from_preorder(preorder(s)) == s);
    });

  Relation not_reflexive(2);
  not_reflexive.set(0, 1);
  not_reflexive.set(1, 1);
  CHECK_THROWS_AS(space_from_preorder({not_reflexive}), std::invalid_argument);

  Relation not_transitive = Relation::diagonal(3);
  not_transitive.set(0, 1);
  not_transitive.set(1, 2);
  CHECK_THROWS_AS(space_from_preorder({not_transitive}), std::invalid_argument);
}

TEST_CASE("mutual membership in minimal neighbourhoods means equality") {
  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y) {
          bool mutual = s.nbhd(x).test(y) && s.nbhd(y).test(x);
          CHECK(mutual == (s.nbhd(x) == s.nbhd(y)));
        }
    });
}

TEST_CASE("valid spaces and reflexive-transitive relations are in bijection") {
  const uint64_t expected[] = {0, 1, 4, 29, 355};
  for (uint32_t n = 1; n <= 4; ++n) {
    uint64_t spaces = count_spaces_brute(n);
    uint64_t preorders = count_preorders_brute(n);
    uint64_t enumerated = 0;
    for_each_topology(n, [&](const FiniteSpace&) { ++enumerated; });
    CHECK(spaces == expected[n]);
    CHECK(preorders == expected[n]);
    CHECK(enumerated == expected[n]);
  }
}

TEST_CASE("reduced edges regenerate the preorder by closure") {
  CHECK(reduced_edges(make_space(1, {{0}})).empty());
  CHECK(reduced_edges(sierpinski()) ==
        std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}});
  CHECK(reduced_edges(FiniteSpace::indiscrete(2)) ==
        std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 0}});

  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      Relation closure = Relation::diagonal(n);
      for (auto [a, b] : reduced_edges(s)) closure.set(a, b);
      // reflexive-transitive closure by fixpoint
      bool changed = true;
      while (changed) {
        changed = false;
        Relation next = closure.composed_with(closure);
        for (uint32_t x = 0; x < n; ++x) {
          PointSet merged = closure.row(x) | next.row(x);
          if (merged != closure.row(x)) {
            closure.row(x) = merged;
            changed = true;
          }
        }
      }
      CHECK(closure == preorder(s).leq);
    });
}

TEST_CASE("dot output names every point and the reduced edges") {
  std::string dot = to_dot(sierpinski());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("1 -> 0;") == std::string::npos);

  std::string single = to_dot(make_space(1, {{0}}));
  CHECK(single.find("0;") != std::string::npos);

  std::vector<std::string> labels{"a", "b"};
  std::string labeled = to_dot(sierpinski(), &labels);
  CHECK(labeled.find("label=\"a\"") != std::string::npos);

  std::string mutual = to_dot(FiniteSpace::indiscrete(2));
  CHECK(mutual.find("0 -> 1;") != std::string::npos);
  CHECK(mutual.find("1 -> 0;") != std::string::npos);
}

TEST_CASE("subspace and product behave on the basic shapes") {
  FiniteSpace s = make_space(3, {{0}, {0, 1}, {0, 1, 2}});
  FiniteSpace sub = subspace(s, PointSet::of(3, {0, 2}));
  CHECK(sub.points() == 2);
  CHECK(sub.nbhd(0) == PointSet::of(2, {0}));
  CHECK(sub.nbhd(1) == PointSet::of(2, {0, 1}));

  FiniteSpace prod = product_space(FiniteSpace::indiscrete(2), FiniteSpace::discrete(2));
  CHECK(prod.points() == 4);
  // pair (x,y) -> 2x + y; factor one is glued, factor two separates
  CHECK(prod.nbhd(0) == PointSet::of(4, {0, 2}));
  CHECK(prod.nbhd(1) == PointSet::of(4, {1, 3}));
  CHECK(prod.nbhd(2) == PointSet::of(4, {0, 2}));
  CHECK(is_open(prod, PointSet::of(4, {0, 2})));
  CHECK_FALSE(is_open(prod, PointSet::of(4, {0})));
}
