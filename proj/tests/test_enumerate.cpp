#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"

#include "alextop/census.hpp"
#include "alextop/generators.hpp"
#include "alextop/json_io.hpp"
#include "alextop/parallel.hpp"

using namespace alextop;

namespace {

// Independent route to the Bell numbers: the triangle a(n+1,0) = a(n,n),
// a(n+1,k+1) = a(n+1,k) + a(n,k), with B_n = a(n,0). Additions only.
std::vector<BigUint> bell_by_triangle(uint32_t max_index) {
  std::vector<BigUint> bells{1};
  std::vector<BigUint> row{1};
  for (uint32_t n = 1; n <= max_index; ++n) {
    std::vector<BigUint> next(n + 1);
    next[0] = row.back();
    for (uint32_t k = 0; k < n; ++k) next[k + 1] = next[k] + row[k];
    row = std::move(next);
    bells.push_back(row[0]);
  }
  return bells;
}

std::string partition_key(const Partition& p) {
  std::string key;
  for (const PointSet& b : p.blocks()) key += b.to_string();
  return key;
}

}  // namespace

TEST_CASE("big integers add, multiply and print") {
  BigUint a = 0;
  CHECK(a.str() == "0");
  CHECK((BigUint(1) + BigUint(0)).str() == "1");
  CHECK((BigUint(0xffffffffull) + BigUint(1)).str() == "4294967296");
  CHECK((BigUint(1000000007) * BigUint(998244353)).str() == "998244359987710471");
  BigUint big = 1;
  for (int i = 0; i < 40; ++i) big = big * BigUint(1000000000);
  CHECK(big.str() == "1" + std::string(360, '0'));
  CHECK_FALSE(big.fits_u64());
  CHECK(BigUint(42).to_u64() == 42);
  CHECK(BigUint(3) < BigUint(10));
  CHECK(BigUint(1) + BigUint(~uint64_t{0}) == BigUint(~uint64_t{0}) + BigUint(1));
}

TEST_CASE("bell numbers match the recurrence anchors") {
  CHECK(bell(0).to_u64() == 1);
  CHECK(bell(1).to_u64() == 1);
  CHECK(bell(2).to_u64() == 2);
  CHECK(bell(3).to_u64() == 5);
  CHECK(bell(5).to_u64() == 52);
  CHECK(bell(6).to_u64() == 203);
  CHECK(bell(7).to_u64() == 877);
  CHECK(bell(25).str() == "4638590332229999353");
  CHECK(bell(25).fits_u64());
  CHECK(bell(26).str() == "49631246523618756274");
  CHECK_FALSE(bell(26).fits_u64());  // first index past 64 bits
  CHECK_THROWS_AS(bell(201), bound_error);
}

TEST_CASE("bell table agrees with the triangle route up to 200") {
  BellTable table(200);
  std::vector<BigUint> oracle = bell_by_triangle(200);
  for (uint32_t n = 0; n <= 200; ++n) CHECK(table.value(n) == oracle[n]);
}

TEST_CASE("partition stream is exact, canonical and counted by bell") {
  std::vector<Partition> three = all_partitions(3);
  REQUIRE(three.size() == 5);
  CHECK(partition_key(three[0]) == "{0,1,2}");
  CHECK(partition_key(three[1]) == "{0,1}{2}");
  CHECK(partition_key(three[2]) == "{0,2}{1}");
  CHECK(partition_key(three[3]) == "{0}{1,2}");
  CHECK(partition_key(three[4]) == "{0}{1}{2}");

  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(4).size() == 15);

  for (uint32_t n = 1; n <= 10; ++n) {
    uint64_t count = 0;
    std::set<std::string> seen;
    for_each_partition(n, [&](const Partition& p) {
      ++count;
      seen.insert(partition_key(p));
    });
    CHECK(count == bell(n).to_u64());
    CHECK(seen.size() == count);
  }

  CHECK_THROWS_AS(for_each_partition(0, [](const Partition&) {}), bound_error);
  CHECK_THROWS_AS(for_each_partition(14, [](const Partition&) {}), bound_error);
}

TEST_CASE("topology stream emits each topology exactly once") {
  const uint64_t expected[] = {0, 1, 4, 29, 355, 6942};
  for (uint32_t n = 1; n <= 5; ++n) {
    uint64_t count = 0;
    std::set<std::string> seen;
    for_each_topology(n, [&](const FiniteSpace& s) {
      ++count;
      std::string key;
      for (uint32_t x = 0; x < n; ++x) key += s.nbhd(x).to_string();
      seen.insert(key);
      CHECK(preorder(s).leq.transitive());
    });
    CHECK(count == expected[n]);
    CHECK(seen.size() == count);
  }
  CHECK_THROWS_AS(for_each_topology(8, [](const FiniteSpace&) {}), bound_error);
}

TEST_CASE("sharded topology stream covers the same spaces as the plain one") {
  for (uint32_t n = 2; n <= 4; ++n) {
    std::vector<std::string> plain;
    for_each_topology(n, [&](const FiniteSpace& s) {
      std::string key;
      for (uint32_t x = 0; x < n; ++x) key += s.nbhd(x).to_string();
      plain.push_back(key);
    });
    std::vector<std::string> sharded;
    for (uint64_t shard = 0; shard < topology_shard_count(n); ++shard)
      for_each_topology_in_shard(n, shard, [&](const FiniteSpace& s) {
        std::string key;
        for (uint32_t x = 0; x < n; ++x) key += s.nbhd(x).to_string();
        sharded.push_back(key);
      });
    CHECK(plain == sharded);
  }
}

TEST_CASE("self-map stream is lexicographic and complete") {
  std::vector<SelfMap> maps = all_self_maps(2);
  REQUIRE(maps.size() == 4);
  CHECK(maps[0].images() == std::vector<uint32_t>{0, 0});
  CHECK(maps[1].images() == std::vector<uint32_t>{0, 1});
  CHECK(maps[2].images() == std::vector<uint32_t>{1, 0});
  CHECK(maps[3].images() == std::vector<uint32_t>{1, 1});

  CHECK(all_self_maps(1).size() == 1);
  CHECK(all_self_maps(3).size() == 27);

  std::vector<SelfMap> sharded;
  for (uint32_t first = 0; first < 3; ++first)
    for_each_self_map_with_first(3, first,
                                 [&](const SelfMap& m) { sharded.push_back(m); });
  CHECK(sharded == all_self_maps(3));

  CHECK_THROWS_AS(for_each_self_map(8, [](const SelfMap&) {}), bound_error);
  CHECK_THROWS_AS(for_each_self_map(0, [](const SelfMap&) {}), bound_error);
}

TEST_CASE("census counts match the bell numbers") {
  CensusReport two = count_uniformizable(2);
  CHECK(two.total_topologies == 4);
  CHECK(two.uniformizable_count == 2);
  CHECK(two.functional_uniformizable_count == 2);
  CHECK(two.bell_value == 2);

  CensusReport three = count_uniformizable(3);
  CHECK(three.total_topologies == 29);
  CHECK(three.uniformizable_count == 5);

  CensusReport four = count_uniformizable(4);
  CHECK(four.total_topologies == 355);
  CHECK(four.uniformizable_count == 15);
  CHECK(four.functional_uniformizable_count == 15);

  CHECK_THROWS_AS(count_uniformizable(6), bound_error);  // needs long_run
  CHECK_THROWS_AS(count_uniformizable(0), bound_error);
}

TEST_CASE("census is identical with one worker and many") {
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 8;
  for (uint32_t n = 1; n <= 4; ++n) {
    nlohmann::json a = census_to_json(count_uniformizable(n, one));
    nlohmann::json b = census_to_json(count_uniformizable(n, many));
    CHECK(a.dump() == b.dump());
  }
  CHECK(theorem_to_json(verify_theorem("salam30", 4, one)).dump() ==
        theorem_to_json(verify_theorem("salam30", 4, many)).dump());
  CHECK(theorem_to_json(verify_theorem("salam80", 4, one)).dump() ==
        theorem_to_json(verify_theorem("salam80", 4, many)).dump());
}

TEST_CASE("verify_theorem passes on small bounds for every id") {
  for (const std::string& id : theorem_ids()) {
    TheoremCheck check = verify_theorem(id, 3);
    CHECK(check.pass);
    CHECK(check.counterexample.empty());
  }
  CHECK(verify_theorem("salam30", 3).instances == 29);
  CHECK(verify_theorem("salam80", 4).instances == 256);
  CHECK(verify_theorem("salam20", 4).instances == 15);
  CHECK(verify_theorem("salam65", 3).instances == 729);
  CHECK(verify_theorem("salam70", 5).instances == 52);
  CHECK(verify_theorem("salam40", 4).instances == 355);
}

TEST_CASE("verify_theorem rejects unknown ids and out-of-bound sweeps") {
  CHECK_THROWS_AS(verify_theorem("salam99", 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem("salam30", 0), bound_error);
  CHECK_THROWS_AS(verify_theorem("salam30", 6), bound_error);
  SweepOptions long_run;
  long_run.long_run = true;
  CHECK(theorem_bound("salam30", false) == 5);
  CHECK(theorem_bound("salam30", true) == 6);
  CHECK_THROWS_AS(verify_theorem("salam30", 7, long_run), bound_error);
  CHECK_THROWS_AS(verify_theorem("salam65", 5, long_run), bound_error);
}

TEST_CASE("census can embed theorem checks in the report") {
  CensusReport r = count_uniformizable(3, {}, {"salam30", "salam80"});
  REQUIRE(r.per_theorem.size() == 2);
  CHECK(r.per_theorem.at("salam30").pass);
  CHECK(r.per_theorem.at("salam80").pass);
  nlohmann::json j = census_to_json(r);
  CHECK(j.at("per_theorem").at("salam30").at("pass") == true);
}

TEST_CASE("worker count override parses ALEX_THREADS") {
  CHECK(default_worker_count() >= 1);
}
