#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "alextop/bigint.hpp"
#include "alextop/errors.hpp"
#include "alextop/uniform.hpp"

namespace alextop {

inline constexpr uint32_t kMaxBellIndex = 200;

class BellTable {
 public:
  /// B_0..B_max via the binomial recurrence; max is capped at 200.
  explicit BellTable(uint32_t max_index);
  const BigUint& value(uint32_t n) const { return b_.at(n); }
  uint32_t max_index() const { return static_cast<uint32_t>(b_.size() - 1); }

 private:
  std::vector<BigUint> b_;
};

BigUint bell(uint32_t n);

struct SweepOptions {
  uint32_t threads = 0;  // 0: use default_worker_count()
  bool long_run = false;
  uint32_t oracle_bound = kDefaultOracleBound;
};

struct TheoremCheck {
  std::string id;
  uint32_t n = 0;
  bool pass = false;
  uint64_t instances = 0;
  std::string counterexample;  // compact JSON for the first failure, in sweep order
};

struct CensusReport {
  uint32_t n = 0;
  uint64_t total_topologies = 0;
  uint64_t uniformizable_count = 0;
  uint64_t functional_uniformizable_count = 0;
  uint64_t bell_value = 0;
  std::map<std::string, TheoremCheck> per_theorem;
};

inline constexpr uint32_t kDefaultCensusBound = 5;

/// Full sweep over the topologies on n labeled points, counting the
/// uniformizable ones and those that additionally admit a generating map.
/// n = 6 and 7 require opts.long_run. Optionally runs the named theorem
/// sweeps in the same report.
CensusReport count_uniformizable(uint32_t n, const SweepOptions& opts = {},
                                 const std::vector<std::string>& verify_ids = {});

/// Exhaustive check of one named property over its instance space.
/// Known ids: salam20, salam30, salam40, salam65, salam70, salam80.
TheoremCheck verify_theorem(std::string_view id, uint32_t n,
                            const SweepOptions& opts = {});

const std::vector<std::string>& theorem_ids();

/// Largest n verify_theorem accepts for the id (with and without long_run).
uint32_t theorem_bound(std::string_view id, bool long_run);

}  // namespace alextop
