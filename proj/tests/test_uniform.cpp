#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "alextop/generators.hpp"
#include "alextop/uniform.hpp"

using namespace alextop;

namespace {

FiniteSpace make_space(uint32_t n, std::vector<std::vector<uint32_t>> basis) {
  std::vector<PointSet> sets;
  for (const auto& b : basis) sets.push_back(PointSet::from_indices(n, b));
  return FiniteSpace(n, std::move(sets));
}

FiniteSpace sierpinski() { return make_space(2, {{0}, {0, 1}}); }

Partition make_partition(uint32_t n, std::vector<std::vector<uint32_t>> blocks) {
  std::vector<PointSet> sets;
  for (const auto& b : blocks) sets.push_back(PointSet::from_indices(n, b));
  return Partition(n, std::move(sets));
}

}  // namespace

TEST_CASE("partition constructor validates and orders blocks") {
  Partition p = make_partition(4, {{2, 3}, {0, 1}});
  CHECK(p.blocks()[0] == PointSet::of(4, {0, 1}));
  CHECK(p.block_of(3) == 1);
  CHECK(p.block_containing(1) == PointSet::of(4, {0, 1}));

  CHECK_THROWS_AS(make_partition(3, {{0, 1}}), std::invalid_argument);          // gap
  CHECK_THROWS_AS(make_partition(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(make_partition(3, {{0, 1, 2}, {}}), std::invalid_argument);   // empty
  CHECK_THROWS_AS(Partition(0, {}), std::invalid_argument);

  CHECK(Partition::from_block_index(3, {1, 0, 1}) == make_partition(3, {{0, 2}, {1}}));
}

TEST_CASE("decide_uniformizable finds witnesses and smallest counterexamples") {
  UniformizabilityVerdict disc = decide_uniformizable(FiniteSpace::discrete(3));
  CHECK(disc.uniformizable);
  REQUIRE(disc.witness.has_value());
  CHECK(*disc.witness == Partition::singletons(3));

  UniformizabilityVerdict sier = decide_uniformizable(sierpinski());
  CHECK_FALSE(sier.uniformizable);
  REQUIRE(sier.counterexample.has_value());
  CHECK(*sier.counterexample == std::pair<uint32_t, uint32_t>{1, 0});

  FiniteSpace blocks =
      make_space(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
  UniformizabilityVerdict v = decide_uniformizable(blocks);
  CHECK(v.uniformizable);
  CHECK(*v.witness == make_partition(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("counterexamples violate exactly the neighbourhood propagation") {
  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      UniformizabilityVerdict v = decide_uniformizable(s);
      if (v.uniformizable) {
        for (uint32_t a = 0; a < n; ++a)
          s.nbhd(a).for_each([&](uint32_t b) { CHECK(s.nbhd(b) == s.nbhd(a)); });
        // witness blocks are exactly the distinct minimal neighbourhoods
        for (uint32_t a = 0; a < n; ++a)
          CHECK(v.witness->block_containing(a) == s.nbhd(a));
      } else {
        auto [a, b] = *v.counterexample;
        CHECK(s.nbhd(a).test(b));
        CHECK(s.nbhd(b) != s.nbhd(a));
      }
    });
}

TEST_CASE("entourage base is the union of block squares") {
  EntourageBase delta = entourage_base_from_partition(Partition::singletons(2));
  CHECK(delta.alpha0 == Relation::diagonal(2));

  EntourageBase whole = entourage_base_from_partition(make_partition(2, {{0, 1}}));
  CHECK(whole.alpha0 == Relation::full(2));

  EntourageBase mixed = entourage_base_from_partition(make_partition(3, {{0, 1}, {2}}));
  Relation expect(3);
  expect.set(0, 0);
  expect.set(0, 1);
  expect.set(1, 0);
  expect.set(1, 1);
  expect.set(2, 2);
  CHECK(mixed.alpha0 == expect);
}

TEST_CASE("uniform axiom report flags exactly the broken axioms") {
  for (uint32_t n = 1; n <= 5; ++n)
    for_each_partition(n, [&](const Partition& p) {
      CHECK(verify_uniform_axioms(entourage_base_from_partition(p).alpha0).all_pass());
    });

  CHECK(verify_uniform_axioms(Relation::diagonal(3)).all_pass());

  Relation asym = Relation::diagonal(2);
  asym.set(0, 1);
  UniformAxiomReport r = verify_uniform_axioms(asym);
  CHECK(r.diagonal_contained);
  CHECK(r.upward_closed);
  CHECK(r.intersection_closed);
  CHECK_FALSE(r.inverse_closed);
  CHECK(r.has_half_refinement);

  Relation no_diag(2);
  no_diag.set(0, 1);
  no_diag.set(1, 0);
  CHECK_FALSE(verify_uniform_axioms(no_diag).diagonal_contained);

  // symmetric with diagonal but composition escapes
  Relation chain = Relation::diagonal(3);
  chain.set(0, 1);
  chain.set(1, 0);
  chain.set(1, 2);
  chain.set(2, 1);
  CHECK_FALSE(verify_uniform_axioms(chain).has_half_refinement);
}

TEST_CASE("topology_from_entourage reads sections as neighbourhoods") {
  CHECK(topology_from_entourage({Relation::diagonal(2)}) == FiniteSpace::discrete(2));
  CHECK(topology_from_entourage({Relation::full(2)}) == FiniteSpace::indiscrete(2));

  EntourageBase mixed = entourage_base_from_partition(make_partition(3, {{0, 1}, {2}}));
  FiniteSpace s = topology_from_entourage(mixed);
  CHECK(s.nbhd(0) == PointSet::of(3, {0, 1}));
  CHECK(s.nbhd(1) == PointSet::of(3, {0, 1}));
  CHECK(s.nbhd(2) == PointSet::of(3, {2}));

  Relation asym = Relation::diagonal(2);
  asym.set(0, 1);
  CHECK_THROWS_AS(topology_from_entourage({asym}), std::invalid_argument);
}

TEST_CASE("partition round trip: base regenerates exactly the partition") {
  for (uint32_t n = 1; n <= 6; ++n)
    for_each_partition(n, [&](const Partition& p) {
      FiniteSpace s = topology_from_entourage(entourage_base_from_partition(p));
      for (uint32_t x = 0; x < n; ++x) CHECK(s.nbhd(x) == p.block_containing(x));
    });
}

TEST_CASE("partition round trip survives a large universe") {
  std::mt19937 rng(20240811);
  const uint32_t n = 70;
  std::vector<uint32_t> block_index(n);
  for (uint32_t x = 0; x < n; ++x) block_index[x] = rng() % 9;
  Partition p = Partition::from_block_index(n, block_index);
  EntourageBase base = entourage_base_from_partition(p);
  CHECK(verify_uniform_axioms(base.alpha0).all_pass());
  FiniteSpace s = topology_from_entourage(base);
  for (uint32_t x = 0; x < n; ++x) CHECK(s.nbhd(x) == p.block_containing(x));
  CHECK(decide_uniformizable(s).uniformizable);
}

TEST_CASE("leq relation symmetry detects strict containments") {
  CHECK(leq_relation_is_equivalence(FiniteSpace::discrete(2)));
  CHECK(leq_relation_is_equivalence(FiniteSpace::indiscrete(3)));
  CHECK_FALSE(leq_relation_is_equivalence(sierpinski()));
}

TEST_CASE("quotient by V-equality") {
  QuotientSpace q1 = quotient_by_R(FiniteSpace::indiscrete(3));
  CHECK(q1.classes.block_count() == 1);
  CHECK(q1.quotient == FiniteSpace::discrete(1));
  CHECK(q1.discrete);

  QuotientSpace q2 = quotient_by_R(sierpinski());
  CHECK(q2.classes == Partition::singletons(2));
  CHECK(q2.quotient == sierpinski());  // classes keep the nesting
  CHECK_FALSE(q2.discrete);

  QuotientSpace q3 = quotient_by_R(make_space(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}));
  CHECK(q3.classes.block_count() == 2);
  CHECK(q3.quotient == FiniteSpace::discrete(2));
  CHECK(q3.discrete);
}

TEST_CASE("both quotient routes agree") {
  for (uint32_t n = 1; n <= 4; ++n)
    for_each_topology(n, [&](const FiniteSpace& s) {
      Partition classes(n, v_equality_classes(s));
      CHECK(detail::quotient_space_by_preimage(s, classes) ==
            detail::quotient_space_by_fixpoint(s, classes));
    });
}

TEST_CASE("pseudometric matrix validation") {
  CHECK_THROWS_AS(PseudometricMatrix(2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PseudometricMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PseudometricMatrix(2, {0, -1, -1, 0}), std::invalid_argument);
  // triangle: d(0,2) > d(0,1) + d(1,2)
  CHECK_THROWS_AS(PseudometricMatrix(3, {0, 1, 9, 1, 0, 1, 9, 1, 0}),
                  std::invalid_argument);
  PseudometricMatrix ok(2, {0, 1, 1, 0});
  CHECK(ok.at(0, 1) == 1.0);
}

TEST_CASE("ball topology of a block metric is the block topology") {
  PseudometricMatrix d(3, {0, 0, 1, 0, 0, 1, 1, 1, 0});
  FiniteSpace s = ball_topology(d);
  CHECK(s.nbhd(0) == PointSet::of(3, {0, 1}));
  CHECK(s.nbhd(2) == PointSet::of(3, {2}));
}

TEST_CASE("pseudometric oracle on the worked examples") {
  auto disc = pseudometric_oracle(FiniteSpace::discrete(3));
  REQUIRE(disc.has_value());
  for (uint32_t x = 0; x < 3; ++x)
    for (uint32_t y = 0; y < 3; ++y)
      CHECK(disc->at(x, y) == (x == y ? 0.0 : 1.0));

  CHECK_FALSE(pseudometric_oracle(sierpinski()).has_value());

  auto blocks = pseudometric_oracle(make_space(3, {{0, 1}, {0, 1}, {2}}));
  REQUIRE(blocks.has_value());
  CHECK(blocks->at(0, 1) == 0.0);
  CHECK(blocks->at(0, 2) == 1.0);
  CHECK(blocks->at(1, 2) == 1.0);

  CHECK_THROWS_AS(pseudometric_oracle(FiniteSpace::discrete(7)), bound_error);
}

TEST_CASE("oracle and partition criterion agree up to five points") {
  for (uint32_t n = 1; n <= 5; ++n) {
    uint64_t checked = 0;
    for_each_topology(n, [&](const FiniteSpace& s) {
      ++checked;
      CHECK(pseudometric_oracle(s).has_value() ==
            decide_uniformizable(s).uniformizable);
    });
    const uint64_t totals[] = {0, 1, 4, 29, 355, 6942};
    CHECK(checked == totals[n]);
  }
}
