#include "alextop/generators.hpp"

namespace alextop {

std::vector<Partition> all_partitions(uint32_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<SelfMap> all_self_maps(uint32_t n) {
  std::vector<SelfMap> out;
  for_each_self_map(n, [&](const SelfMap& m) { out.push_back(m); });
  return out;
}

std::vector<FiniteSpace> all_topologies(uint32_t n) {
  std::vector<FiniteSpace> out;
  for_each_topology(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

}  // namespace alextop
