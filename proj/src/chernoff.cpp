#include "lcasc/chernoff.hpp"

#include <cmath>
#include <random>

#include "lcasc/random_tape.hpp"

namespace lcasc {

double chernoff_double_mean_bound(double mu) { return std::exp(-mu / 3.0); }

double simulate_double_mean_tail(std::uint64_t t, double p, std::uint64_t trials,
                                 std::uint64_t seed) {
  const RandomTape tape(seed);
  Stream s = tape.stream({.tag = Tag::kUser, .i = 3});
  std::bernoulli_distribution coin(p);
  const double threshold = 2.0 * static_cast<double>(t) * p;
  std::uint64_t exceed = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t sum = 0;
    for (std::uint64_t k = 0; k < t; ++k) sum += coin(s) ? 1 : 0;
    if (static_cast<double>(sum) > threshold) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(trials);
}

}  // namespace lcasc
