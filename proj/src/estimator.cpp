#include "lcasc/estimator.hpp"

#include <cstdio>
#include <unordered_map>

#include "lcasc/integral.hpp"

namespace lcasc {

std::string EstimateReport::csv_header() { return "samples,hits,num_sets,estimate,queries"; }

std::string EstimateReport::csv_row() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", estimate);
  return std::to_string(samples) + "," + std::to_string(hits) + "," + std::to_string(num_sets) +
         "," + buf + "," + std::to_string(queries);
}

std::uint64_t estimator_sample_count(const SetCoverInstance& inst) {
  return 100 * static_cast<std::uint64_t>(inst.delta()) * inst.freq();
}

EstimateReport estimate_with_probe(const SetCoverInstance& inst, const RandomTape& sample_tape,
                                   const SetProbe& probe) {
  EstimateReport r;
  r.samples = estimator_sample_count(inst);
  r.num_sets = inst.num_sets();
  Stream draws = sample_tape.stream({.tag = Tag::kEstimator});
  for (std::uint64_t k = 0; k < r.samples; ++k) {
    const auto [in_cover, queries] = probe(static_cast<Id>(draws.uniform(inst.num_sets())));
    r.hits += in_cover ? 1 : 0;
    r.queries += queries;
  }
  r.estimate = static_cast<double>(r.num_sets) * static_cast<double>(r.hits) /
               static_cast<double>(r.samples);
  return r;
}

EstimateReport estimate_opt_resampled(const SetCoverInstance& inst, const AlgoParams& params,
                                      std::uint64_t lca_seed, std::uint64_t sample_seed,
                                      CacheMode mode) {
  const RandomTape lca_tape(lca_seed);
  const RandomTape sample_tape(sample_seed);
  ProbeContext shared(inst, lca_tape, params);
  // A fresh-context probe is a pure function of the set id, so repeats of
  // the same id reuse its answer and query count.
  std::unordered_map<Id, std::pair<bool, std::uint64_t>> strict;
  const SetProbe probe = [&](Id s) -> std::pair<bool, std::uint64_t> {
    if (mode == CacheMode::kShared) {
      const std::uint64_t before = shared.query_count();
      const bool in = integral_probe_set(shared, s);
      return {in, shared.query_count() - before};
    }
    if (auto it = strict.find(s); it != strict.end()) return it->second;
    ProbeContext ctx(inst, lca_tape, params);
    const bool in = integral_probe_set(ctx, s);
    return strict[s] = {in, ctx.query_count()};
  };
  return estimate_with_probe(inst, sample_tape, probe);
}

EstimateReport estimate_opt(const SetCoverInstance& inst, const AlgoParams& params,
                            std::uint64_t seed, CacheMode mode) {
  return estimate_opt_resampled(inst, params, seed, seed, mode);
}

}  // namespace lcasc
