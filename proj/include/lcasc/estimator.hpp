#ifndef LCASC_ESTIMATOR_HPP
#define LCASC_ESTIMATOR_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "lcasc/access.hpp"
#include "lcasc/instance.hpp"

namespace lcasc {

struct EstimateReport {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t num_sets = 0;
  double estimate = 0.0;
  std::uint64_t queries = 0;

  static std::string csv_header();
  std::string csv_row() const;
};

/// 100 * Δ * f.
std::uint64_t estimator_sample_count(const SetCoverInstance& inst);

/// Membership oracle for one sampled set; returns (in cover, queries spent).
using SetProbe = std::function<std::pair<bool, std::uint64_t>(Id)>;

/// Draws estimator_sample_count(inst) set ids with replacement from
/// `sample_tape` and counts the ones `probe` puts in the cover.
EstimateReport estimate_with_probe(const SetCoverInstance& inst, const RandomTape& sample_tape,
                                   const SetProbe& probe);

/// Estimator over the integral LCA. The LCA and the sampling read disjoint
/// labels of the same tape.
EstimateReport estimate_opt(const SetCoverInstance& inst, const AlgoParams& params,
                            std::uint64_t seed, CacheMode mode = CacheMode::kShared);

/// As estimate_opt, but with the set sampling driven by its own seed while
/// the LCA cover stays fixed by `lca_seed`.
EstimateReport estimate_opt_resampled(const SetCoverInstance& inst, const AlgoParams& params,
                                      std::uint64_t lca_seed, std::uint64_t sample_seed,
                                      CacheMode mode = CacheMode::kShared);

}  // namespace lcasc

#endif  // LCASC_ESTIMATOR_HPP
