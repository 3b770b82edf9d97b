#ifndef LCASC_REFERENCE_HPP
#define LCASC_REFERENCE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lcasc/access.hpp"
#include "lcasc/instance.hpp"

namespace lcasc {

struct InstanceTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Max-uncovered-gain greedy; ties go to the least set id.
IntegralCover greedy_cover(const SetCoverInstance& inst);

inline constexpr std::size_t kExactCoverMaxSets = 24;

/// Minimum-cardinality cover by branch and bound. Throws InstanceTooLarge
/// above kExactCoverMaxSets sets.
IntegralCover exact_cover(const SetCoverInstance& inst);

/// Per-iteration record of a global run. Iterations are indexed by
/// t = (i-1)*log_f + j, stored at position t-1. Weights are in units of 1/f.
struct RunTrace {
  int log_delta = 1;
  int log_f = 1;
  std::size_t f = 1;
  /// Effective degree of each set at the start of iteration t (for the
  /// retroactive sweep: the stored estimate after outer iteration t).
  std::vector<std::vector<double>> degree;
  /// Weight units added to each set during iteration t.
  std::vector<std::vector<std::uint64_t>> added;
  /// First iteration at whose end the element counts as covered; 0 if never.
  std::vector<int> first_cover;

  int num_iterations() const { return log_delta * log_f; }
  /// Rows "iteration,kind,id,metric,value".
  void write_csv(std::ostream& out) const;
};

struct FractionalRun {
  FractionalCover cover;
  /// Pre-scaling weights in units of 1/f, capped at f.
  std::vector<std::uint64_t> units;
  /// Sets raised to weight 1 by the least-id covering pass.
  std::vector<bool> naive;
  RunTrace trace;
};

FractionalRun run_alg1(const SetCoverInstance& inst);

/// Free choices of the slacked algorithm: covering thresholds tau per
/// (element, iteration) in [ell, r] and cut-offs jcut per (set, phase) in
/// [1, log_f + 1].
struct SlackPolicy {
  double ell = 1.0;
  double r = 1.0;
  std::vector<std::vector<double>> tau;  // [element][t-1]
  std::vector<std::vector<int>> jcut;    // [set][i-1]

  /// ell = r = 1 and jcut = 1 everywhere.
  static SlackPolicy identity(const SetCoverInstance& inst);
  static SlackPolicy random(const SetCoverInstance& inst, double ell, double r,
                            std::uint64_t seed);
  /// Every tau set to `value`, jcut drawn as in random().
  static SlackPolicy constant_tau(const SetCoverInstance& inst, double ell, double r,
                                  double value, std::uint64_t seed);
  /// Throws InfeasibleParams if the policy is out of range for `inst`.
  void validate(const SetCoverInstance& inst) const;
};

FractionalRun run_alg2(const SetCoverInstance& inst, const SlackPolicy& policy);

/// (i', j', i, j, S) -> estimate of the effective degree of S at (i', j') as
/// seen from iteration (i, j); nullopt means the estimate failed.
using DegreeEstimator = std::function<std::optional<double>(int, int, int, int, Id)>;

/// Retroactive-update sweep of a single set. Advanced lazily one outer
/// iteration at a time; history up to progress() is final.
class SetSweep {
 public:
  using Estimate = std::function<std::optional<double>(int ip, int jp, int i, int j)>;
  /// Rounding bit consulted when a trigger fires at (i', j').
  using Bit = std::function<bool(int ip, int jp)>;

  struct Trigger {
    int outer_t;
    int inner_t;
    std::uint64_t units;
    bool bit;
  };

  SetSweep(const AlgoParams& params, std::size_t delta, std::size_t f);

  /// Runs outer iterations progress()+1 .. t. No-op if already there.
  void advance_to(int t, const Estimate& est, const Bit& bit = {});

  int progress() const { return progress_; }
  std::uint64_t units() const { return units_; }
  /// Units held after outer iteration t; requires t <= progress().
  std::uint64_t units_through(int t) const;
  bool saturated() const { return saturated_; }
  /// Stored degree estimate for iteration t.
  double dhat(int t) const { return dhat_[t]; }
  /// Outer iteration of the first trigger whose rounding bit was 1.
  std::optional<int> first_in_cover() const { return first_in_cover_; }
  bool in_cover_by(int t) const { return first_in_cover_ && *first_in_cover_ <= t; }
  const std::vector<Trigger>& triggers() const { return triggers_; }

 private:
  AlgoParams params_;
  std::size_t delta_;
  std::size_t f_;
  int progress_ = 0;
  bool saturated_ = false;
  std::uint64_t units_ = 0;
  std::vector<double> dhat_;
  std::vector<bool> fired_;
  std::vector<std::uint64_t> units_after_;
  std::optional<int> first_in_cover_;
  std::vector<Trigger> triggers_;
};

/// Runs the retroactive-update algorithm for every set, then scales by 4
/// (if params.scale_by_four) and covers leftovers with least-id sets.
FractionalRun run_alg6(const SetCoverInstance& inst, const AlgoParams& params,
                       const DegreeEstimator& est);

/// Reports the effective degree recorded in a run_alg1 trace, ignoring the
/// boost frame.
DegreeEstimator exact_degree_estimator(const RunTrace& alg1_trace);
DegreeEstimator always_fail_estimator();

/// Weights from scaled units followed by the least-id pass for elements still
/// below weight 1.
FractionalRun finish_fractional(const SetCoverInstance& inst, std::vector<std::uint64_t> units,
                                bool scale_by_four, RunTrace trace);

}  // namespace lcasc

#endif  // LCASC_REFERENCE_HPP
