#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gentlekit/invariants.hpp"
#include "gentlekit/io.hpp"
#include "gentlekit/random.hpp"

namespace fixtures {

using namespace gentlekit;

inline std::string data_path(const std::string& name) { return std::string(GK_DATA_DIR) + "/" + name; }

// Reference-orientation overrides that reproduce the edge directions drawn in the worked examples.
inline std::set<std::string> flips_for(const std::string& name) {
  if (name == "triple1") return {"4", "5"};
  if (name == "loop") return {"1"};
  if (name == "sixvertex") return {"1", "2", "3", "6"};
  if (name == "twosided") return {"1", "2", "3"};
  return {};
}

inline GentleQuiver quiver(const std::string& name) { return parse_gentle(read_file(data_path(name + ".quiver"))); }

inline Instance instance(const std::string& name) { return Instance(quiver(name), flips_for(name)); }

inline const std::vector<std::string>& named() {
  static const std::vector<std::string> v{"triple0", "triple1", "triple2", "looptail", "loop",
                                          "small2", "nonpalin", "twosided", "sixvertex"};
  return v;
}

inline std::vector<Instance> named_instances() {
  std::vector<Instance> out;
  for (const auto& n : named()) out.push_back(instance(n));
  return out;
}

inline RibbonGraph random_graph(std::mt19937_64& rng, const RandomRibbonOptions& opt = {}) {
  for (;;) {
    RibbonGraph r = random_ribbon(rng, opt);
    if (r.num_vertices() == 2 && r.num_edges() == 1) continue;
    return r;
  }
}

inline std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, const RandomRibbonOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (out.size() < count) out.emplace_back(from_ribbon(random_graph(rng, opt)));
  return out;
}

}  // namespace fixtures
