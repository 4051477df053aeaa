#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "alextop/census.hpp"
#include "alextop/funcmap.hpp"
#include "alextop/group.hpp"
#include "alextop/space.hpp"
#include "alextop/uniform.hpp"

namespace alextop {

// File schemas. Spaces: {"n": int, "basis": [[int,...],...]} or
// {"n": int, "opens": [[int,...],...]}, exactly one of the two; optional
// "labels". Maps: {"n": int, "f": [int,...]} or {"n": int, "maps":
// [[int,...],...]}. Groups: {"order": int, "table": [[int,...],...]},
// optional "labels". Parse errors throw std::invalid_argument naming the
// offending field.

struct SpaceFile {
  FiniteSpace space;
  std::vector<std::string> labels;  // empty when absent
};
SpaceFile parse_space_file(const nlohmann::json& j);

struct MapFile {
  std::optional<SelfMap> map;
  std::optional<KPrimalFamily> family;
};
MapFile parse_map_file(const nlohmann::json& j);

struct GroupFile {
  FiniteGroup group;
  std::vector<std::string> labels;
};
GroupFile parse_group_file(const nlohmann::json& j);

nlohmann::json point_set_to_json(const PointSet& s);
nlohmann::json space_to_json(const FiniteSpace& s);
nlohmann::json partition_to_json(const Partition& p);
nlohmann::json self_map_to_json(const SelfMap& m);

/// {"uniformizable": bool, "witness": [[int,...],...]|null,
///  "counterexample": [int,int]|null}
nlohmann::json verdict_to_json(const UniformizabilityVerdict& v);

nlohmann::json census_to_json(const CensusReport& r);
nlohmann::json theorem_to_json(const TheoremCheck& t);
nlohmann::json zahra10_to_json(const Zahra10Report& r);
nlohmann::json zahra20_to_json(const Zahra20Report& r);
nlohmann::json decomposition_to_json(const ProductDecomposition& d);

}  // namespace alextop
