#include "lcasc/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

#include "lcasc/random_tape.hpp"

namespace lcasc {

IntegralCover greedy_cover(const SetCoverInstance& inst) {
  IntegralCover cover = IntegralCover::none(inst.num_sets());
  std::vector<bool> covered(inst.num_elements(), false);
  std::size_t remaining = inst.num_elements();
  while (remaining > 0) {
    Id best = 0;
    std::size_t best_gain = 0;
    for (Id s = 0; s < inst.num_sets(); ++s) {
      if (cover.chosen[s]) continue;
      std::size_t gain = 0;
      for (Id e : inst.members(s)) gain += covered[e] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    cover.chosen[best] = true;
    for (Id e : inst.members(best)) {
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  return cover;
}

namespace {

class ExactSearch {
 public:
  explicit ExactSearch(const SetCoverInstance& inst) : inst_(inst) {
    masks_.resize(inst.num_elements());
    for (Id e = 0; e < inst.num_elements(); ++e) {
      for (Id s : inst.sets_of(e)) masks_[e] |= std::uint32_t{1} << s;
    }
    best_mask_ = (inst.num_sets() == 32) ? ~0u : ((std::uint32_t{1} << inst.num_sets()) - 1);
    best_size_ = inst.num_sets();
  }

  std::uint32_t solve() {
    search(0, 0);
    return best_mask_;
  }

 private:
  void search(std::uint32_t chosen, int size) {
    // Uncovered element with the fewest options; branching on it is complete.
    int pick = -1;
    int pick_options = std::numeric_limits<int>::max();
    std::size_t uncovered = 0;
    for (Id e = 0; e < masks_.size(); ++e) {
      if (masks_[e] & chosen) continue;
      ++uncovered;
      const int options = std::popcount(masks_[e]);
      if (options < pick_options) {
        pick_options = options;
        pick = static_cast<int>(e);
      }
    }
    if (pick < 0) {
      if (static_cast<std::size_t>(size) < best_size_) {
        best_size_ = size;
        best_mask_ = chosen;
      }
      return;
    }
    const std::size_t lower = (uncovered + inst_.delta() - 1) / inst_.delta();
    if (size + lower >= best_size_) return;
    for (std::uint32_t m = masks_[pick]; m != 0; m &= m - 1) {
      search(chosen | (m & -m), size + 1);
    }
  }

  const SetCoverInstance& inst_;
  std::vector<std::uint32_t> masks_;
  std::uint32_t best_mask_;
  std::size_t best_size_;
};

}  // namespace

IntegralCover exact_cover(const SetCoverInstance& inst) {
  if (inst.num_sets() > kExactCoverMaxSets) {
    throw InstanceTooLarge("exact cover supports at most " + std::to_string(kExactCoverMaxSets) +
                           " sets, got " + std::to_string(inst.num_sets()));
  }
  const std::uint32_t mask = ExactSearch(inst).solve();
  IntegralCover cover = IntegralCover::none(inst.num_sets());
  for (Id s = 0; s < inst.num_sets(); ++s) cover.chosen[s] = (mask >> s) & 1u;
  return cover;
}

void RunTrace::write_csv(std::ostream& out) const {
  out << "iteration,kind,id,metric,value\n";
  for (std::size_t t = 0; t < degree.size(); ++t) {
    for (std::size_t s = 0; s < degree[t].size(); ++s) {
      out << t + 1 << ",set," << s << ",degree," << degree[t][s] << '\n';
    }
  }
  for (std::size_t t = 0; t < added.size(); ++t) {
    for (std::size_t s = 0; s < added[t].size(); ++s) {
      if (added[t][s] != 0) out << t + 1 << ",set," << s << ",added_units," << added[t][s] << '\n';
    }
  }
  for (std::size_t e = 0; e < first_cover.size(); ++e) {
    out << first_cover[e] << ",element," << e << ",first_cover," << first_cover[e] << '\n';
  }
}

namespace {

RunTrace empty_trace(const SetCoverInstance& inst, int log_delta, int log_f) {
  RunTrace trace;
  trace.log_delta = log_delta;
  trace.log_f = log_f;
  trace.f = inst.freq();
  const auto T = static_cast<std::size_t>(log_delta * log_f);
  trace.degree.assign(T, std::vector<double>(inst.num_sets(), 0.0));
  trace.added.assign(T, std::vector<std::uint64_t>(inst.num_sets(), 0));
  trace.first_cover.assign(inst.num_elements(), 0);
  return trace;
}

std::uint64_t element_units(const SetCoverInstance& inst, const std::vector<std::uint64_t>& units,
                            Id e) {
  std::uint64_t sum = 0;
  for (Id s : inst.sets_of(e)) sum += units[s];
  return sum;
}

// Shared body of the two global fractional algorithms. `gain` decides
// whether set s gains weight at (i, j) given its effective degree; `covers`
// decides whether element e joins the covered set at iteration t.
template <class Gain, class Covers>
FractionalRun run_phased(const SetCoverInstance& inst, Gain gain, Covers covers) {
  const int log_delta = clamped_log2(inst.delta());
  const int log_f = clamped_log2(inst.freq());
  const std::uint64_t f = inst.freq();
  RunTrace trace = empty_trace(inst, log_delta, log_f);
  std::vector<std::uint64_t> units(inst.num_sets(), 0);
  std::vector<bool> covered(inst.num_elements(), false);
  for (int i = 1; i <= log_delta; ++i) {
    for (int j = 1; j <= log_f; ++j) {
      const int t = (i - 1) * log_f + j;
      for (Id s = 0; s < inst.num_sets(); ++s) {
        std::uint32_t d = 0;
        for (Id e : inst.members(s)) d += covered[e] ? 0 : 1;
        trace.degree[t - 1][s] = d;
        if (gain(s, d, i, j)) {
          const std::uint64_t add = std::min(f - units[s], pow2_times(j, 1));
          units[s] += add;
          trace.added[t - 1][s] = add;
        }
      }
      for (Id e = 0; e < inst.num_elements(); ++e) {
        if (!covered[e] && covers(e, element_units(inst, units, e), t)) {
          covered[e] = true;
          trace.first_cover[e] = t;
        }
      }
    }
  }
  FractionalRun run;
  run.cover.weight.resize(inst.num_sets());
  for (Id s = 0; s < inst.num_sets(); ++s) {
    run.cover.weight[s] = static_cast<double>(units[s]) / static_cast<double>(f);
  }
  run.units = std::move(units);
  run.naive.assign(inst.num_sets(), false);
  run.trace = std::move(trace);
  return run;
}

bool dense_at(std::uint64_t d, int i, std::size_t delta) { return pow2_times(i, d) >= delta; }

}  // namespace

FractionalRun run_alg1(const SetCoverInstance& inst) {
  const std::size_t delta = inst.delta();
  const std::uint64_t f = inst.freq();
  return run_phased(
      inst, [&](Id, std::uint32_t d, int i, int) { return dense_at(d, i, delta); },
      [&](Id, std::uint64_t u, int) { return u >= f; });
}

SlackPolicy SlackPolicy::identity(const SetCoverInstance& inst) {
  const int log_delta = clamped_log2(inst.delta());
  const int log_f = clamped_log2(inst.freq());
  SlackPolicy p;
  p.tau.assign(inst.num_elements(), std::vector<double>(log_delta * log_f, 1.0));
  p.jcut.assign(inst.num_sets(), std::vector<int>(log_delta, 1));
  return p;
}

SlackPolicy SlackPolicy::random(const SetCoverInstance& inst, double ell, double r,
                                std::uint64_t seed) {
  SlackPolicy p = identity(inst);
  p.ell = ell;
  p.r = r;
  const RandomTape tape(seed);
  const int log_f = clamped_log2(inst.freq());
  for (Id e = 0; e < inst.num_elements(); ++e) {
    Stream s = tape.stream({.tag = Tag::kUser, .i = 1, .vertex = e});
    for (double& tau : p.tau[e]) {
      tau = ell + (r - ell) * static_cast<double>(s() >> 11) * 0x1.0p-53;
    }
  }
  for (Id set = 0; set < inst.num_sets(); ++set) {
    Stream s = tape.stream({.tag = Tag::kUser, .i = 2, .vertex = set});
    for (int& cut : p.jcut[set]) cut = 1 + static_cast<int>(s.uniform(log_f + 1));
  }
  return p;
}

SlackPolicy SlackPolicy::constant_tau(const SetCoverInstance& inst, double ell, double r,
                                      double value, std::uint64_t seed) {
  SlackPolicy p = random(inst, ell, r, seed);
  for (auto& row : p.tau) std::fill(row.begin(), row.end(), value);
  return p;
}

void SlackPolicy::validate(const SetCoverInstance& inst) const {
  const int log_delta = clamped_log2(inst.delta());
  const int log_f = clamped_log2(inst.freq());
  if (!(ell > 0.0 && ell <= 1.0 && r >= 1.0)) {
    throw InfeasibleParams("slack policy needs 0 < ell <= 1 <= r");
  }
  if (tau.size() != inst.num_elements() || jcut.size() != inst.num_sets()) {
    throw InfeasibleParams("slack policy does not match the instance");
  }
  for (const auto& row : tau) {
    if (row.size() != static_cast<std::size_t>(log_delta * log_f)) {
      throw InfeasibleParams("slack policy tau row has the wrong length");
    }
    for (double x : row) {
      if (x < ell || x > r) throw InfeasibleParams("tau outside [ell, r]");
    }
  }
  for (const auto& row : jcut) {
    if (row.size() != static_cast<std::size_t>(log_delta)) {
      throw InfeasibleParams("slack policy jcut row has the wrong length");
    }
    for (int x : row) {
      if (x < 1 || x > log_f + 1) throw InfeasibleParams("jcut outside [1, log f + 1]");
    }
  }
}

FractionalRun run_alg2(const SetCoverInstance& inst, const SlackPolicy& policy) {
  policy.validate(inst);
  const std::size_t delta = inst.delta();
  const auto f = static_cast<double>(inst.freq());
  FractionalRun run = run_phased(
      inst,
      [&](Id s, std::uint32_t d, int i, int j) {
        if (dense_at(d, i, delta)) return true;
        const bool moderate = dense_at(d, i + 2, delta);
        return moderate && j < policy.jcut[s][i - 1];
      },
      [&](Id e, std::uint64_t u, int t) {
        return static_cast<double>(u) >= policy.tau[e][t - 1] * f;
      });
  for (double& w : run.cover.weight) w /= policy.ell;
  return run;
}

SetSweep::SetSweep(const AlgoParams& params, std::size_t delta, std::size_t f)
    : params_(params),
      delta_(delta),
      f_(f),
      dhat_(params.num_iterations() + 1, 0.0),
      fired_(params.num_iterations() + 1, false),
      units_after_(params.num_iterations() + 1, 0) {}

std::uint64_t SetSweep::units_through(int t) const {
  return t <= 0 ? 0 : units_after_[std::min(t, progress_)];
}

void SetSweep::advance_to(int t, const Estimate& est, const Bit& bit) {
  const int T = params_.num_iterations();
  t = std::min(t, T);
  while (progress_ < t) {
    const int outer = progress_ + 1;
    const int i = (outer - 1) / params_.log_f + 1;
    const int j = (outer - 1) % params_.log_f + 1;
    double running_min = std::numeric_limits<double>::infinity();
    for (int inner = 1; inner <= outer && !saturated_; ++inner) {
      const int ip = (inner - 1) / params_.log_f + 1;
      const int jp = (inner - 1) % params_.log_f + 1;
      const std::optional<double> fresh = est(ip, jp, i, j);
      running_min = std::min(running_min, fresh.value_or(0.0));
      dhat_[inner] = std::max(dhat_[inner], running_min);
      if (!fired_[inner] && dhat_[inner] * std::ldexp(1.0, ip) >= static_cast<double>(delta_)) {
        fired_[inner] = true;
        const std::uint64_t add = std::min<std::uint64_t>(f_ - units_, pow2_times(jp, 1));
        units_ += add;
        const bool b = bit ? bit(ip, jp) : false;
        if (b && !first_in_cover_) first_in_cover_ = outer;
        triggers_.push_back({outer, inner, add, b});
      }
      if (units_ >= f_) saturated_ = true;
    }
    units_after_[outer] = units_;
    progress_ = outer;
    if (saturated_) {
      std::fill(units_after_.begin() + outer, units_after_.end(), units_);
      progress_ = T;
    }
  }
}

FractionalRun finish_fractional(const SetCoverInstance& inst, std::vector<std::uint64_t> units,
                                bool scale_by_four, RunTrace trace) {
  const std::uint64_t f = inst.freq();
  const std::uint64_t factor = scale_by_four ? 4 : 1;
  FractionalRun run;
  run.cover.weight.resize(inst.num_sets());
  for (Id s = 0; s < inst.num_sets(); ++s) {
    run.cover.weight[s] = static_cast<double>(factor * units[s]) / static_cast<double>(f);
  }
  run.naive.assign(inst.num_sets(), false);
  for (Id e = 0; e < inst.num_elements(); ++e) {
    if (factor * element_units(inst, units, e) < f) run.naive[inst.sets_of(e)[0]] = true;
  }
  for (Id s = 0; s < inst.num_sets(); ++s) {
    if (run.naive[s]) run.cover.weight[s] = std::max(run.cover.weight[s], 1.0);
  }
  run.units = std::move(units);
  run.trace = std::move(trace);
  return run;
}

FractionalRun run_alg6(const SetCoverInstance& inst, const AlgoParams& params,
                       const DegreeEstimator& est) {
  const int T = params.num_iterations();
  RunTrace trace = empty_trace(inst, params.log_delta, params.log_f);
  std::vector<std::uint64_t> units(inst.num_sets(), 0);
  for (Id s = 0; s < inst.num_sets(); ++s) {
    SetSweep sweep(params, inst.delta(), inst.freq());
    const SetSweep::Estimate fn = [&](int ip, int jp, int i, int j) { return est(ip, jp, i, j, s); };
    for (int t = 1; t <= T; ++t) {
      sweep.advance_to(t, fn);
      trace.degree[t - 1][s] = sweep.dhat(t);
      trace.added[t - 1][s] = sweep.units_through(t) - sweep.units_through(t - 1);
    }
    units[s] = sweep.units();
  }
  const std::uint64_t f = inst.freq();
  for (Id e = 0; e < inst.num_elements(); ++e) {
    std::uint64_t sum = 0;
    for (int t = 1; t <= T && trace.first_cover[e] == 0; ++t) {
      for (Id s : inst.sets_of(e)) sum += trace.added[t - 1][s];
      if (sum >= f) trace.first_cover[e] = t;
    }
  }
  return finish_fractional(inst, std::move(units), params.scale_by_four, std::move(trace));
}

DegreeEstimator exact_degree_estimator(const RunTrace& alg1_trace) {
  return [&alg1_trace](int ip, int jp, int, int, Id s) -> std::optional<double> {
    return alg1_trace.degree[(ip - 1) * alg1_trace.log_f + jp - 1][s];
  };
}

DegreeEstimator always_fail_estimator() {
  return [](int, int, int, int, Id) -> std::optional<double> { return std::nullopt; };
}

}  // namespace lcasc
