#include "alextop/census.hpp"

#include <algorithm>

#include "json.hpp"

#include "alextop/funcmap.hpp"
#include "alextop/generators.hpp"
#include "alextop/json_io.hpp"
#include "alextop/parallel.hpp"

namespace alextop {

BellTable::BellTable(uint32_t max_index) {
  if (max_index > kMaxBellIndex)
    throw bound_error("Bell table supports indices up to " +
                      std::to_string(kMaxBellIndex) + ", got " +
                      std::to_string(max_index));
  b_.resize(max_index + 1);
  b_[0] = 1;
  if (max_index >= 1) b_[1] = 1;
  std::vector<BigUint> binom_row{1};  // C(k, .) built row by row
  for (uint32_t k = 1; k < max_index; ++k) {
    std::vector<BigUint> next(k + 1);
    next[0] = 1;
    next[k] = 1;
    for (uint32_t i = 1; i < k; ++i) next[i] = binom_row[i - 1] + binom_row[i];
    binom_row = std::move(next);
    BigUint sum;
    for (uint32_t i = 0; i <= k; ++i) sum += binom_row[i] * b_[i];
    b_[k + 1] = std::move(sum);
  }
}

BigUint bell(uint32_t n) { return BellTable(n).value(n); }

namespace {

using nlohmann::json;

struct SweepShard {
  uint64_t instances = 0;
  bool failed = false;
  std::string counterexample;
};

TheoremCheck merge_shards(std::string id, uint32_t n,
                          const std::vector<SweepShard>& shards) {
  TheoremCheck out;
  out.id = std::move(id);
  out.n = n;
  out.pass = true;
  for (const SweepShard& s : shards) {
    out.instances += s.instances;
    if (s.failed && out.pass) {
      out.pass = false;
      out.counterexample = s.counterexample;
    }
  }
  return out;
}

void record_failure(SweepShard& shard, json instance) {
  if (!shard.failed) {
    shard.failed = true;
    shard.counterexample = instance.dump();
  }
}

// --- salam20: a partition's entourage base satisfies the axioms and its
// uniform topology has exactly the partition as minimal neighbourhoods.
TheoremCheck sweep_partition_entourage(uint32_t n) {
  SweepShard shard;
  for_each_partition(n, [&](const Partition& p) {
    ++shard.instances;
    EntourageBase base = entourage_base_from_partition(p);
    UniformAxiomReport axioms = verify_uniform_axioms(base.alpha0);
    FiniteSpace space = topology_from_entourage(base);
    bool regenerated = true;
    for (uint32_t x = 0; x < n; ++x)
      if (space.nbhd(x) != p.block_containing(x)) regenerated = false;
    if (!(axioms.all_pass() && regenerated))
      record_failure(shard, json{{"n", n},
                                 {"blocks", partition_to_json(p)},
                                 {"axioms_pass", axioms.all_pass()},
                                 {"regenerated", regenerated}});
  });
  return merge_shards("salam20", n, {shard});
}

// --- salam30: six characterizations of uniformizability agree on every
// topology.
TheoremCheck sweep_six_way_equivalence(uint32_t n, const SweepOptions& opts) {
  const bool run_oracle = n <= opts.oracle_bound;
  auto shard_fn = [&](uint64_t shard_id) {
    SweepShard shard;
    for_each_topology_in_shard(n, shard_id, [&](const FiniteSpace& s) {
      ++shard.instances;
      const bool partition_criterion = decide_uniformizable(s).uniformizable;

      bool compatible_base_exists = false;
      for_each_partition(n, [&](const Partition& p) {
        if (compatible_base_exists) return;
        EntourageBase base = entourage_base_from_partition(p);
        if (verify_uniform_axioms(base.alpha0).all_pass() &&
            topology_from_entourage(base) == s)
          compatible_base_exists = true;
      });

      bool pointwise = true;
      for (uint32_t a = 0; a < n && pointwise; ++a)
        s.nbhd(a).for_each([&](uint32_t b) {
          if (s.nbhd(b) != s.nbhd(a)) pointwise = false;
        });

      const bool equivalence = leq_relation_is_equivalence(s);
      const bool quotient_discrete = quotient_by_R(s).discrete;
      const bool oracle = run_oracle
                              ? pseudometric_oracle(s, opts.oracle_bound).has_value()
                              : partition_criterion;

      const bool legs[] = {oracle,    partition_criterion, compatible_base_exists,
                           pointwise, equivalence,         quotient_discrete};
      bool agree = true;
      for (bool leg : legs) agree = agree && (leg == legs[0]);
      if (!agree)
        record_failure(shard,
                       json{{"space", space_to_json(s)},
                            {"legs",
                             {{"pseudometric_oracle", oracle},
                              {"partition_criterion", partition_criterion},
                              {"compatible_base_exists", compatible_base_exists},
                              {"pointwise_v_equality", pointwise},
                              {"leq_is_equivalence", equivalence},
                              {"quotient_discrete", quotient_discrete}}}});
    });
    return shard;
  };
  auto shards =
      run_sharded<SweepShard>(topology_shard_count(n), opts.threads, shard_fn);
  return merge_shards("salam30", n, shards);
}

// --- salam40: the C1-C3 characterization matches the exhaustive search for
// a generating map, and every witness reproduces its space. Uniformizable
// spaces must always admit one.
TheoremCheck sweep_c123_characterization(uint32_t n, const SweepOptions& opts) {
  auto shard_fn = [&](uint64_t shard_id) {
    SweepShard shard;
    for_each_topology_in_shard(n, shard_id, [&](const FiniteSpace& s) {
      ++shard.instances;
      const C123Report c = check_c123(s);
      auto exhaustive = find_generating_map(s, MapSearch::exhaustive);
      auto constructed = find_generating_map(s, MapSearch::characterize);
      const bool exhaustive_witness_ok =
          !exhaustive || functional_topology(*exhaustive) == s;
      const bool modes_agree = c.all() == exhaustive.has_value() &&
                               constructed.has_value() == exhaustive.has_value();
      const bool uniformizable = decide_uniformizable(s).uniformizable;
      const bool covers_uniformizable = !uniformizable || exhaustive.has_value();
      if (!(modes_agree && exhaustive_witness_ok && covers_uniformizable))
        record_failure(shard, json{{"space", space_to_json(s)},
                                   {"c123", {c.c1, c.c2, c.c3}},
                                   {"exhaustive_found", exhaustive.has_value()},
                                   {"constructed_found", constructed.has_value()},
                                   {"exhaustive_witness_ok", exhaustive_witness_ok},
                                   {"uniformizable", uniformizable}});
    });
    return shard;
  };
  auto shards =
      run_sharded<SweepShard>(topology_shard_count(n), opts.threads, shard_fn);
  return merge_shards("salam40", n, shards);
}

// --- salam65: a uniformizable 2-primal topology admits a single generating
// map.
TheoremCheck sweep_kprimal_collapse(uint32_t n) {
  SweepShard shard;
  std::vector<SelfMap> maps = all_self_maps(n);
  for (const SelfMap& f1 : maps)
    for (const SelfMap& f2 : maps) {
      ++shard.instances;
      FiniteSpace s = k_primal_topology(KPrimalFamily({f1, f2}));
      if (!decide_uniformizable(s).uniformizable) continue;
      auto witness = find_generating_map(s, MapSearch::exhaustive);
      const bool ok = witness && functional_topology(*witness) == s;
      if (!ok)
        record_failure(shard, json{{"n", n},
                                   {"f1", f1.images()},
                                   {"f2", f2.images()},
                                   {"space", space_to_json(s)},
                                   {"generating_map_found", witness.has_value()}});
    }
  return merge_shards("salam65", n, {shard});
}

// --- salam70: the per-block cyclic map of a partition is all-periodic and
// generates exactly the partition topology.
TheoremCheck sweep_partition_cycle_map(uint32_t n) {
  SweepShard shard;
  for_each_partition(n, [&](const Partition& p) {
    ++shard.instances;
    SelfMap f = cyclic_map_from_partition(p);
    FiniteSpace s = functional_topology(f);
    bool basis_matches = true;
    for (uint32_t x = 0; x < n; ++x)
      if (s.nbhd(x) != p.block_containing(x)) basis_matches = false;
    const bool all_periodic = periodic_points(f).periodic.is_full();
    if (!(basis_matches && all_periodic))
      record_failure(shard, json{{"n", n},
                                 {"blocks", partition_to_json(p)},
                                 {"f", f.images()},
                                 {"basis_matches", basis_matches},
                                 {"per_equals_x", all_periodic}});
  });
  return merge_shards("salam70", n, {shard});
}

// --- salam80: the functional topology of f is uniformizable exactly when
// every point is periodic.
TheoremCheck sweep_periodicity_criterion(uint32_t n, const SweepOptions& opts) {
  auto shard_fn = [&](uint64_t first) {
    SweepShard shard;
    for_each_self_map_with_first(n, static_cast<uint32_t>(first), [&](const SelfMap& f) {
      ++shard.instances;
      const bool uniformizable =
          decide_uniformizable(functional_topology(f)).uniformizable;
      const bool all_periodic = periodic_points(f).periodic.is_full();
      if (uniformizable != all_periodic)
        record_failure(shard, json{{"n", n},
                                   {"f", f.images()},
                                   {"uniformizable", uniformizable},
                                   {"per_equals_x", all_periodic}});
    });
    return shard;
  };
  auto shards = run_sharded<SweepShard>(n, opts.threads, shard_fn);
  return merge_shards("salam80", n, shards);
}

struct TheoremInfo {
  uint32_t default_bound;
  uint32_t long_run_bound;
};

const std::map<std::string, TheoremInfo>& theorem_table() {
  static const std::map<std::string, TheoremInfo> table = {
      {"salam20", {kMaxPartitionPoints, kMaxPartitionPoints}},
      {"salam30", {kDefaultCensusBound, 6}},
      {"salam40", {4, 5}},
      {"salam65", {3, 4}},
      {"salam70", {6, kMaxPartitionPoints}},
      {"salam80", {kDefaultCensusBound, kMaxSelfMapPoints}},
  };
  return table;
}

struct CensusCounts {
  uint64_t total = 0;
  uint64_t unif = 0;
  uint64_t funif = 0;
};

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, info] : theorem_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

uint32_t theorem_bound(std::string_view id, bool long_run) {
  auto it = theorem_table().find(std::string(id));
  if (it == theorem_table().end())
    throw std::invalid_argument("unknown theorem id: " + std::string(id));
  return long_run ? it->second.long_run_bound : it->second.default_bound;
}

TheoremCheck verify_theorem(std::string_view id, uint32_t n,
                            const SweepOptions& opts) {
  auto it = theorem_table().find(std::string(id));
  if (it == theorem_table().end()) {
    std::string known;
    for (const std::string& k : theorem_ids()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown theorem id: " + std::string(id) +
                                " (known: " + known + ")");
  }
  if (n < 1) throw bound_error("theorem sweep requires n >= 1");
  const TheoremInfo& info = it->second;
  const uint32_t bound = opts.long_run ? info.long_run_bound : info.default_bound;
  if (n > bound) {
    std::string msg = "theorem " + std::string(id) + " sweep supports n <= " +
                      std::to_string(bound);
    if (!opts.long_run && n <= info.long_run_bound)
      msg += " (n = " + std::to_string(n) + " needs the long-run flag)";
    throw bound_error(msg);
  }

  if (id == "salam20") return sweep_partition_entourage(n);
  if (id == "salam30") return sweep_six_way_equivalence(n, opts);
  if (id == "salam40") return sweep_c123_characterization(n, opts);
  if (id == "salam65") return sweep_kprimal_collapse(n);
  if (id == "salam70") return sweep_partition_cycle_map(n);
  return sweep_periodicity_criterion(n, opts);
}

CensusReport count_uniformizable(uint32_t n, const SweepOptions& opts,
                                 const std::vector<std::string>& verify_ids) {
  if (n < 1) throw bound_error("census requires n >= 1");
  const uint32_t bound = opts.long_run ? kMaxTopologyPoints : kDefaultCensusBound;
  if (n > bound) {
    std::string msg = "census supports n <= " + std::to_string(bound);
    if (!opts.long_run && n <= kMaxTopologyPoints)
      msg += " (n = " + std::to_string(n) + " needs the long-run flag)";
    throw bound_error(msg);
  }

  auto shard_fn = [&](uint64_t shard_id) {
    CensusCounts c;
    for_each_topology_in_shard(n, shard_id, [&](const FiniteSpace& s) {
      ++c.total;
      if (!decide_uniformizable(s).uniformizable) return;
      ++c.unif;
      if (find_generating_map(s, MapSearch::characterize)) ++c.funif;
    });
    return c;
  };
  auto shards =
      run_sharded<CensusCounts>(topology_shard_count(n), opts.threads, shard_fn);

  CensusReport report;
  report.n = n;
  for (const CensusCounts& c : shards) {
    report.total_topologies += c.total;
    report.uniformizable_count += c.unif;
    report.functional_uniformizable_count += c.funif;
  }
  report.bell_value = bell(n).to_u64();
  for (const std::string& id : verify_ids)
    report.per_theorem.emplace(id, verify_theorem(id, n, opts));
  return report;
}

}  // namespace alextop
