#ifndef LCASC_TEST_FIXTURES_HPP
#define LCASC_TEST_FIXTURES_HPP

#include <cmath>
#include <string>
#include <vector>

#include "lcasc/instance.hpp"

namespace fixture {

using lcasc::Id;
using lcasc::SetCoverInstance;

inline SetCoverInstance make(std::size_t n, std::vector<std::vector<Id>> sets) {
  return SetCoverInstance::from_sets(n, std::move(sets));
}

/// f sets, each holding all n elements.
inline SetCoverInstance complete_bipartite(std::size_t f, std::size_t n) {
  std::vector<Id> all(n);
  for (Id e = 0; e < n; ++e) all[e] = e;
  return make(n, std::vector<std::vector<Id>>(f, all));
}

/// Uniform random instance with sizes drawn from the seed; at most max_sets sets.
inline SetCoverInstance small_uniform(std::uint64_t seed, std::size_t max_sets = 24,
                                      std::size_t max_elements = 60) {
  const std::size_t m = 3 + seed * 7 % (max_sets - 2);
  const std::size_t n = 4 + seed * 13 % (max_elements - 3);
  const std::size_t f = 1 + seed % std::min<std::size_t>(4, m);
  return lcasc::generate_instance(lcasc::UniformRandomFamily{n, m, f}, seed).instance;
}

struct Named {
  std::string name;
  SetCoverInstance inst;
};

/// Fixed family of instances with at most 24 sets.
inline std::vector<Named> exact_sized() {
  using lcasc::BlockPlantedFamily;
  using lcasc::StarFamily;
  using lcasc::UniformRandomFamily;
  const std::vector<lcasc::GeneratorSpec> specs = {
      StarFamily{8},
      StarFamily{16},
      BlockPlantedFamily{2, 4, 2},
      BlockPlantedFamily{3, 8, 2},
      BlockPlantedFamily{2, 8, 4},
      BlockPlantedFamily{3, 4, 4},
      UniformRandomFamily{30, 20, 3},
      UniformRandomFamily{40, 24, 4},
  };
  std::vector<Named> out;
  std::uint64_t seed = 11;
  for (const auto& spec : specs) {
    out.push_back({lcasc::describe(spec), lcasc::generate_instance(spec, seed++).instance});
  }
  return out;
}

inline double log_factor(const SetCoverInstance& inst) {
  return 1.0 + std::log2(static_cast<double>(inst.delta()));
}

}  // namespace fixture

#endif  // LCASC_TEST_FIXTURES_HPP
