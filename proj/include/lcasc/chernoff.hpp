#ifndef LCASC_CHERNOFF_HPP
#define LCASC_CHERNOFF_HPP

#include <cstdint>

namespace lcasc {

/// exp(-mu / 3): bound on P[X > 2 mu] for a sum of independent [0, 1]
/// variables with mean mu.
double chernoff_double_mean_bound(double mu);

/// Fraction of `trials` runs in which the sum of t Bernoulli(p) draws exceeds
/// 2 * t * p.
double simulate_double_mean_tail(std::uint64_t t, double p, std::uint64_t trials,
                                 std::uint64_t seed);

}  // namespace lcasc

#endif  // LCASC_CHERNOFF_HPP
