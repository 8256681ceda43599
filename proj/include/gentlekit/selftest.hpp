#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "derived.hpp"
#include "invariants.hpp"
#include "random.hpp"

namespace gentlekit {

struct SelftestResult {
  std::size_t instances = 0;
  std::size_t walks = 0;
  std::vector<std::string> failures;
};

// Randomized property suite over gentle quivers obtained from random marked ribbon graphs.
inline SelftestResult run_selftest(std::uint64_t seed, std::size_t count = 200, std::size_t walk_len = 6) {
  SelftestResult res;
  std::mt19937_64 rng(seed);
  auto fail = [&](std::size_t k, const std::string& what) {
    res.failures.push_back("instance " + std::to_string(k) + ": " + what);
  };
  for (std::size_t k = 0; k < count; ++k) {
    RibbonGraph r = random_ribbon(rng);
    try {
      GentleQuiver g = from_ribbon(r);
      Instance in(g);
      ++res.instances;
      RibbonGraph back = to_ribbon(g);
      if (!same_marked_ribbon(r, back, roundtrip_vertex_map(r, back))) fail(k, "ribbon round trip");
      if (!same_bound_quiver(g.base, from_ribbon(back).base)) fail(k, "quiver round trip");
      euler_analysis(in);
      auto aag = aag_invariant(in);
      auto cox = coxeter(in, aag);
      for (const auto& w : reduced_walks(in.rib, walk_len)) {
        ++res.walks;
        BigInt q = euler_value(in.cartan, incidence_vector(in.rib, w));
        BigInt want = !is_closed(in.rib, w) ? 1 : (w.length() % 2 == 1 ? 2 : 0);
        if (q != want) fail(k, "root value of walk " + format_walk(in.rib, w));
      }
      for (int t = 0; t < 5; ++t) {
        Walk w = random_reduced_walk(rng, in.rib, 8);
        auto tri = ar_translate(in, 0, w);
        if (cox.matrix * k0_class(in.rib, tri.end) != k0_class(in.rib, tri.start)) fail(k, "Coxeter action on AR triangle");
      }
    } catch (const Error& e) {
      fail(k, e.what());
    }
  }
  return res;
}

}  // namespace gentlekit
