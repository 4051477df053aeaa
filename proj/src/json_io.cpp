#include "alextop/json_io.hpp"

#include <stdexcept>

namespace alextop {

using nlohmann::json;

namespace {

uint32_t require_count(const json& j, const char* file_kind, const char* key) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(file_kind) + ": expected a JSON object");
  if (!j.contains(key) || !j.at(key).is_number_unsigned() || j.at(key) == 0)
    throw std::invalid_argument(std::string(file_kind) + ": \"" + key +
                                "\" must be a positive integer");
  return j.at(key).get<uint32_t>();
}

PointSet parse_point_list(const json& arr, uint32_t n, const std::string& where) {
  if (!arr.is_array())
    throw std::invalid_argument(where + ": expected an array of point ids");
  PointSet s(n);
  for (const json& v : arr) {
    if (!v.is_number_unsigned() || v.get<uint64_t>() >= n)
      throw std::invalid_argument(where + ": point id out of range 0.." +
                                  std::to_string(n - 1));
    s.set(v.get<uint32_t>());
  }
  return s;
}

std::vector<std::string> parse_labels(const json& j, uint32_t n, const char* file_kind) {
  std::vector<std::string> labels;
  if (!j.contains("labels")) return labels;
  const json& arr = j.at("labels");
  if (!arr.is_array() || arr.size() != n)
    throw std::invalid_argument(std::string(file_kind) +
                                ": \"labels\" must list one string per point");
  for (const json& v : arr) {
    if (!v.is_string())
      throw std::invalid_argument(std::string(file_kind) + ": labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  return labels;
}

}  // namespace

SpaceFile parse_space_file(const json& j) {
  const uint32_t n = require_count(j, "space file", "n");
  const bool has_basis = j.contains("basis");
  const bool has_opens = j.contains("opens");
  if (has_basis == has_opens)
    throw std::invalid_argument(
        "space file: exactly one of \"basis\" or \"opens\" must be present");

  SpaceFile out{FiniteSpace::discrete(1), parse_labels(j, n, "space file")};
  if (has_basis) {
    const json& arr = j.at("basis");
    if (!arr.is_array() || arr.size() != n)
      throw std::invalid_argument("space file: \"basis\" must list one set per point");
    std::vector<PointSet> basis;
    for (uint32_t x = 0; x < n; ++x)
      basis.push_back(parse_point_list(arr[x], n, "space file: basis[" +
                                                      std::to_string(x) + "]"));
    out.space = FiniteSpace(n, std::move(basis));
  } else {
    const json& arr = j.at("opens");
    if (!arr.is_array())
      throw std::invalid_argument("space file: \"opens\" must be an array of sets");
    OpenSetFamily fam;
    fam.n = n;
    for (size_t i = 0; i < arr.size(); ++i)
      fam.sets.push_back(parse_point_list(arr[i], n, "space file: opens[" +
                                                         std::to_string(i) + "]"));
    out.space = from_open_sets(fam);
  }
  return out;
}

MapFile parse_map_file(const json& j) {
  const uint32_t n = require_count(j, "map file", "n");
  const bool has_f = j.contains("f");
  const bool has_maps = j.contains("maps");
  if (has_f == has_maps)
    throw std::invalid_argument(
        "map file: exactly one of \"f\" or \"maps\" must be present");

  auto parse_images = [&](const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.size() != n)
      throw std::invalid_argument(where + ": must list one image per point");
    std::vector<uint32_t> f;
    for (const json& v : arr) {
      if (!v.is_number_unsigned() || v.get<uint64_t>() >= n)
        throw std::invalid_argument(where + ": image out of range 0.." +
                                    std::to_string(n - 1));
      f.push_back(v.get<uint32_t>());
    }
    return SelfMap(n, std::move(f));
  };

  MapFile out;
  if (has_f) {
    out.map = parse_images(j.at("f"), "map file: \"f\"");
  } else {
    const json& arr = j.at("maps");
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("map file: \"maps\" must be a nonempty array");
    std::vector<SelfMap> maps;
    for (size_t i = 0; i < arr.size(); ++i)
      maps.push_back(parse_images(arr[i], "map file: maps[" + std::to_string(i) + "]"));
    out.family = KPrimalFamily(std::move(maps));
  }
  return out;
}

GroupFile parse_group_file(const json& j) {
  const uint32_t n = require_count(j, "group file", "order");
  if (!j.contains("table") || !j.at("table").is_array() || j.at("table").size() != n)
    throw std::invalid_argument("group file: \"table\" must be an order x order array");
  std::vector<std::vector<uint32_t>> table(n);
  for (uint32_t a = 0; a < n; ++a) {
    const json& row = j.at("table")[a];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("group file: table row " + std::to_string(a) +
                                  " must have " + std::to_string(n) + " entries");
    for (const json& v : row) {
      if (!v.is_number_unsigned() || v.get<uint64_t>() >= n)
        throw std::invalid_argument("group file: table row " + std::to_string(a) +
                                    " has an entry out of range");
      table[a].push_back(v.get<uint32_t>());
    }
  }
  return GroupFile{FiniteGroup::from_table(table), parse_labels(j, n, "group file")};
}

json point_set_to_json(const PointSet& s) {
  json arr = json::array();
  s.for_each([&](uint32_t x) { arr.push_back(x); });
  return arr;
}

json space_to_json(const FiniteSpace& s) {
  json basis = json::array();
  for (uint32_t x = 0; x < s.points(); ++x) basis.push_back(point_set_to_json(s.nbhd(x)));
  return json{{"n", s.points()}, {"basis", basis}};
}

json partition_to_json(const Partition& p) {
  json arr = json::array();
  for (const PointSet& b : p.blocks()) arr.push_back(point_set_to_json(b));
  return arr;
}

json self_map_to_json(const SelfMap& m) {
  return json{{"n", m.points()}, {"f", m.images()}};
}

json verdict_to_json(const UniformizabilityVerdict& v) {
  json out{{"uniformizable", v.uniformizable},
           {"witness", nullptr},
           {"counterexample", nullptr}};
  if (v.witness) out["witness"] = partition_to_json(*v.witness);
  if (v.counterexample)
    out["counterexample"] = json::array({v.counterexample->first,
                                         v.counterexample->second});
  return out;
}

json theorem_to_json(const TheoremCheck& t) {
  json out{{"theorem", t.id},
           {"n", t.n},
           {"pass", t.pass},
           {"instances", t.instances},
           {"counterexample", nullptr}};
  if (!t.pass) out["counterexample"] = json::parse(t.counterexample);
  return out;
}

json census_to_json(const CensusReport& r) {
  json per = json::object();
  for (const auto& [id, check] : r.per_theorem) per[id] = theorem_to_json(check);
  return json{{"n", r.n},
              {"total_topologies", r.total_topologies},
              {"uniformizable", r.uniformizable_count},
              {"functional_uniformizable", r.functional_uniformizable_count},
              {"bell", r.bell_value},
              {"per_theorem", per}};
}

json decomposition_to_json(const ProductDecomposition& d) {
  json phi = json::array();
  for (const auto& row : d.phi) phi.push_back(row);
  return json{{"e_points", d.e_points},
              {"block_reps", d.block_reps},
              {"phi", phi},
              {"E", space_to_json(d.E)},
              {"F", space_to_json(d.F)},
              {"checks",
               {{"one_to_one", d.checks.one_to_one},
                {"onto", d.checks.onto},
                {"continuous", d.checks.continuous},
                {"open_map", d.checks.open_map}}}};
}

json zahra10_to_json(const Zahra10Report& r) {
  json out{{"translate_property", r.translate_property},
           {"v_e_open", r.v_e_open},
           {"coset_relation_matches", r.coset_relation_matches},
           {"decomposition_applicable", r.decomposition_applicable},
           {"decomposition", nullptr},
           {"agree", r.agree}};
  if (r.decomposition) {
    out["decomposition"] = decomposition_to_json(*r.decomposition);
    out["e_non_discrete"] = r.e_non_discrete;
    out["f_discrete"] = r.f_discrete;
  }
  return out;
}

json zahra20_to_json(const Zahra20Report& r) {
  json out{{"v_e_open_and_finite", r.v_e_open_and_finite},
           {"functional_alexandroff", r.functional_alexandroff},
           {"generating_map", nullptr},
           {"f_discrete_and_finite", r.f_discrete_and_finite},
           {"agree", r.agree}};
  if (r.generating_map) out["generating_map"] = r.generating_map->images();
  return out;
}

}  // namespace alextop
