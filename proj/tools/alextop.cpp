// alextop: analysis workbench for finite Alexandroff topological spaces.
//
// Subcommands: analyze, fmap, group, count, verify, dot. Reports print as
// text by default and as JSON with --json. Exit codes: 0 success / sweep
// passed, 1 sweep found a counterexample, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "alextop/census.hpp"
#include "alextop/errors.hpp"
#include "alextop/funcmap.hpp"
#include "alextop/generators.hpp"
#include "alextop/group.hpp"
#include "alextop/json_io.hpp"
#include "alextop/parallel.hpp"
#include "alextop/space.hpp"
#include "alextop/uniform.hpp"

using nlohmann::json;
using namespace alextop;

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

std::string join_csv(const std::vector<uint32_t>& xs) {
  std::string out;
  for (uint32_t x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

PointSet parse_subgroup_csv(const std::string& csv, uint32_t order) {
  PointSet set(order);
  std::stringstream ss(csv);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--subgroup: '" + item + "' is not an element id");
    }
    if (pos != item.size() || v >= order)
      throw std::invalid_argument("--subgroup: '" + item + "' is not an element id in 0.." +
                                  std::to_string(order - 1));
    set.set(static_cast<uint32_t>(v));
    any = true;
  }
  if (!any) throw std::invalid_argument("--subgroup: expected a comma-separated element list");
  return set;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_analyze(const std::string& path, bool as_json, uint32_t oracle_bound) {
  SpaceFile file = parse_space_file(load_json_file(path));
  const FiniteSpace& s = file.space;
  const uint32_t n = s.points();

  UniformizabilityVerdict verdict = decide_uniformizable(s);
  C123Report c = check_c123(s);
  QuotientSpace q = quotient_by_R(s);
  std::optional<SelfMap> gen = find_generating_map(s);
  bool oracle_ran = n <= oracle_bound;
  std::optional<PseudometricMatrix> oracle;
  if (oracle_ran) oracle = pseudometric_oracle(s, oracle_bound);

  json out{{"n", n},
           {"verdict", verdict_to_json(verdict)},
           {"c123", {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}}},
           {"functional_alexandroff", gen.has_value()},
           {"generating_map", nullptr},
           {"quotient",
            {{"classes", partition_to_json(q.classes)}, {"discrete", q.discrete}}},
           {"oracle", {{"ran", oracle_ran}}}};
  if (gen) out["generating_map"] = gen->images();
  if (oracle_ran) {
    out["oracle"]["found"] = oracle.has_value();
    out["oracle"]["agrees"] = oracle.has_value() == verdict.uniformizable;
  }

  if (as_json) {
    emit(out);
    return 0;
  }
  std::cout << "points: " << n << "\n";
  std::cout << "uniformizable: " << yesno(verdict.uniformizable) << "\n";
  if (verdict.witness) {
    std::cout << "  witness partition:";
    for (const PointSet& b : verdict.witness->blocks()) std::cout << " " << b.to_string();
    std::cout << "\n";
  }
  if (verdict.counterexample)
    std::cout << "  counterexample: " << verdict.counterexample->second << " lies in V("
              << verdict.counterexample->first << ") but their neighbourhoods differ\n";
  std::cout << "C1 nested-or-disjoint: " << yesno(c.c1) << "\n";
  std::cout << "C2 no shared proper neighbourhood: " << yesno(c.c2) << "\n";
  std::cout << "C3 finite intervals: " << yesno(c.c3) << "\n";
  std::cout << "functional Alexandroff: " << yesno(gen.has_value()) << "\n";
  if (gen) std::cout << "  generating map: " << join_csv(gen->images()) << "\n";
  std::cout << "quotient: " << q.classes.block_count()
            << " classes, discrete: " << yesno(q.discrete) << "\n";
  if (oracle_ran)
    std::cout << "pseudometric oracle: " << (oracle ? "found" : "none") << " ("
              << (oracle.has_value() == verdict.uniformizable ? "agrees" : "DISAGREES")
              << ")\n";
  else
    std::cout << "pseudometric oracle: skipped (n > " << oracle_bound << ")\n";
  return 0;
}

int run_fmap(const std::string& path, bool as_json) {
  MapFile file = parse_map_file(load_json_file(path));

  if (file.map) {
    const SelfMap& f = *file.map;
    OrbitStructure orb = periodic_points(f);
    FiniteSpace top = functional_topology(f);
    UniformizabilityVerdict verdict = decide_uniformizable(top);
    Theorem80Result t80 = theorem80_check(f);

    json out{{"n", f.points()},
             {"f", f.images()},
             {"periodic", point_set_to_json(orb.periodic)},
             {"period", orb.period},
             {"per_equals_x", t80.per_equals_x},
             {"topology", space_to_json(top)},
             {"verdict", verdict_to_json(verdict)},
             {"theorem80_agree", t80.uniformizable == t80.per_equals_x}};
    if (as_json) {
      emit(out);
      return 0;
    }
    std::cout << "points: " << f.points() << "\nmap: " << join_csv(f.images()) << "\n";
    std::cout << "periodic points: " << orb.periodic.to_string() << "\n";
    std::cout << "periods:";
    orb.periodic.for_each(
        [&](uint32_t x) { std::cout << " " << x << ":" << orb.period[x]; });
    std::cout << "\nPer(f) = X: " << yesno(t80.per_equals_x) << "\n";
    std::cout << "induced basis:";
    for (uint32_t x = 0; x < f.points(); ++x)
      std::cout << " V(" << x << ")=" << top.nbhd(x).to_string();
    std::cout << "\nuniformizable: " << yesno(verdict.uniformizable) << "\n";
    std::cout << "criterion agreement: "
              << yesno(t80.uniformizable == t80.per_equals_x) << "\n";
    return 0;
  }

  const KPrimalFamily& fam = *file.family;
  FiniteSpace top = k_primal_topology(fam);
  UniformizabilityVerdict verdict = decide_uniformizable(top);
  std::optional<SelfMap> gen = find_generating_map(top);

  json maps = json::array();
  for (const SelfMap& m : fam.maps()) maps.push_back(m.images());
  json out{{"n", fam.points()},
           {"k", fam.k()},
           {"maps", maps},
           {"topology", space_to_json(top)},
           {"verdict", verdict_to_json(verdict)},
           {"single_generating_map", nullptr}};
  if (gen) out["single_generating_map"] = gen->images();
  if (as_json) {
    emit(out);
    return 0;
  }
  std::cout << "points: " << fam.points() << ", k = " << fam.k() << "\n";
  std::cout << "k-primal basis:";
  for (uint32_t x = 0; x < fam.points(); ++x)
    std::cout << " V(" << x << ")=" << top.nbhd(x).to_string();
  std::cout << "\nuniformizable: " << yesno(verdict.uniformizable) << "\n";
  if (gen)
    std::cout << "single generating map: " << join_csv(gen->images()) << "\n";
  else
    std::cout << "single generating map: none\n";
  return 0;
}

int run_group(const std::string& cayley_path, const std::string& subgroup_csv,
              bool as_json) {
  GroupFile file = parse_group_file(load_json_file(cayley_path));
  PointSet n_set = parse_subgroup_csv(subgroup_csv, file.group.order());
  GroupWithTopology gt = coset_topology(file.group, n_set);
  Zahra10Report r10 = check_zahra10(gt);
  Zahra20Report r20 = check_zahra20(gt);

  json cosets = json::array();
  for (const PointSet& c : v_equality_classes(gt.space))
    cosets.push_back(point_set_to_json(c));
  json out{{"order", file.group.order()},
           {"subgroup", point_set_to_json(n_set)},
           {"cosets", cosets},
           {"zahra10", zahra10_to_json(r10)},
           {"zahra20", zahra20_to_json(r20)}};
  if (as_json) {
    emit(out);
    return 0;
  }
  std::cout << "group of order " << file.group.order() << ", subgroup "
            << n_set.to_string() << "\n";
  std::cout << "cosets:";
  for (const PointSet& c : v_equality_classes(gt.space)) std::cout << " " << c.to_string();
  std::cout << "\ntranslate property V(g) = gV(e): " << yesno(r10.translate_property)
            << "\n";
  std::cout << "coset relation matches V-equality: " << yesno(r10.coset_relation_matches)
            << "\n";
  if (r10.decomposition) {
    const ProductDecomposition& d = *r10.decomposition;
    std::cout << "decomposition: E " << d.E.points() << " points (non-discrete "
              << yesno(r10.e_non_discrete) << "), F " << d.F.points()
              << " points (discrete " << yesno(r10.f_discrete) << ")\n";
    std::cout << "  reps:";
    for (uint32_t rep : d.block_reps) std::cout << " " << rep;
    std::cout << "\n  phi:";
    for (size_t h = 0; h < d.phi.size(); ++h)
      for (size_t c = 0; c < d.phi[h].size(); ++c)
        std::cout << " (" << d.e_points[h] << ",D" << c << ")->" << d.phi[h][c];
    std::cout << "\n  checks: one-to-one " << yesno(d.checks.one_to_one) << ", onto "
              << yesno(d.checks.onto) << ", continuous " << yesno(d.checks.continuous)
              << ", open " << yesno(d.checks.open_map) << "\n";
  } else {
    std::cout << "decomposition: skipped (V(e) is a single point)\n";
  }
  std::cout << "functional Alexandroff: " << yesno(r20.functional_alexandroff);
  if (r20.generating_map)
    std::cout << " (map " << join_csv(r20.generating_map->images()) << ")";
  std::cout << "\nzahra10 agree: " << yesno(r10.agree)
            << "\nzahra20 agree: " << yesno(r20.agree) << "\n";
  return 0;
}

int run_count(uint32_t n, bool as_json, bool long_run) {
  SweepOptions opts;
  opts.long_run = long_run;
  CensusReport r = count_uniformizable(n, opts);
  if (as_json) {
    emit(census_to_json(r));
    return 0;
  }
  std::cout << "n=" << r.n << ": topologies " << r.total_topologies << ", uniformizable "
            << r.uniformizable_count << ", functional+uniformizable "
            << r.functional_uniformizable_count << ", bell " << r.bell_value << "\n";
  return 0;
}

int run_verify(const std::string& id, uint32_t n, bool as_json, bool long_run) {
  SweepOptions opts;
  opts.long_run = long_run;
  TheoremCheck check = verify_theorem(id, n, opts);
  if (as_json)
    emit(theorem_to_json(check));
  else if (check.pass)
    std::cout << id << " n=" << n << ": PASS (" << check.instances << " instances)\n";
  else
    std::cout << id << " n=" << n << ": FAIL\ncounterexample: " << check.counterexample
              << "\n";
  return check.pass ? 0 : 1;
}

int run_dot(const std::string& path) {
  SpaceFile file = parse_space_file(load_json_file(path));
  std::cout << to_dot(file.space, file.labels.empty() ? nullptr : &file.labels);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite Alexandroff topological spaces"};
  app.require_subcommand(1);

  std::string space_path, map_path, cayley_path, subgroup_csv, theorem_id;
  uint32_t n = 0;
  uint32_t oracle_bound = kDefaultOracleBound;
  bool as_json = false, long_run = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "uniformizability, C1-C3, quotient and generating map of a space");
  analyze->add_option("space-file", space_path, "space JSON file")->required();
  analyze->add_flag("--json", as_json, "emit JSON instead of text");
  analyze->add_option("--oracle-bound", oracle_bound,
                      "largest n for the pseudometric search");

  CLI::App* fmap = app.add_subcommand(
      "fmap", "orbit structure and induced topology of a self-map or map family");
  fmap->add_option("map-file", map_path, "map JSON file")->required();
  fmap->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* group = app.add_subcommand(
      "group", "coset topology and product decomposition of a finite group");
  group->add_option("--cayley", cayley_path, "group JSON file")->required();
  group->add_option("--subgroup", subgroup_csv, "normal subgroup as element ids")
      ->required();
  group->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* count = app.add_subcommand("count", "census of topologies on n points");
  count->add_option("--n", n, "point count")->required();
  count->add_flag("--json", as_json, "emit JSON instead of text");
  count->add_flag("--long-run", long_run, "unlock n = 6 and 7");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem sweep");
  verify
      ->add_option("--theorem", theorem_id,
                   "sweep id (salam20 salam30 salam40 salam65 salam70 salam80)")
      ->required();
  verify->add_option("--n", n, "point count")->required();
  verify->add_flag("--json", as_json, "emit JSON instead of text");
  verify->add_flag("--long-run", long_run, "unlock the larger sweep bounds");

  CLI::App* dot = app.add_subcommand("dot", "DOT drawing of a space's reduced preorder");
  dot->add_option("space-file", space_path, "space JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(space_path, as_json, oracle_bound);
    if (app.got_subcommand(fmap)) return run_fmap(map_path, as_json);
    if (app.got_subcommand(group)) return run_group(cayley_path, subgroup_csv, as_json);
    if (app.got_subcommand(count)) return run_count(n, as_json, long_run);
    if (app.got_subcommand(verify)) return run_verify(theorem_id, n, as_json, long_run);
    if (app.got_subcommand(dot)) return run_dot(space_path);
  } catch (const bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const edge_case_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
