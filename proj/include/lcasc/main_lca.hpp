#ifndef LCASC_MAIN_LCA_HPP
#define LCASC_MAIN_LCA_HPP

#include <optional>

#include "lcasc/access.hpp"
#include "lcasc/reference.hpp"

namespace lcasc {

/// Iteration (i, j) evaluated on behalf of the later iteration (i*, j*);
/// b scales the sample sizes.
struct BoostFrame {
  int i;
  int j;
  int i_star;
  int j_star;
  int b;

  /// Frame whose b counts the iterations from (i, j) to (i*, j*):
  /// j* - j + 1 within one phase, j* across phases.
  static BoostFrame at(int i, int j, int i_star, int j_star);
  BoostFrame with(int i2, int j2, int b2) const { return {i2, j2, i_star, j_star, b2}; }
};

/// Estimated effective degree; nullopt is a failed estimate.
using DegreeOutcome = std::optional<double>;

/// Degree and weight estimates with boosted retroactive re-execution. In
/// integral mode the degree estimate prunes elements through covered
/// estimates instead of weight estimates.
class MainLca {
 public:
  enum class Mode { kFractional, kIntegral };

  MainLca(ProbeContext& ctx, Mode mode = Mode::kFractional) : ctx_(ctx), mode_(mode) {}

  DegreeOutcome degree_estimate(const BoostFrame& frame, Id s);
  /// Returns 0 or 1/2.
  double weight_estimate(const BoostFrame& frame, Id e);
  /// Set containing e seen in the cover by the end of (i, j), if any.
  std::optional<Id> covered_estimate(const BoostFrame& frame, Id e);

  /// Retroactive sweep of s advanced through outer iteration t.
  const SetSweep& sweep(Id s, int t);
  /// Final sweep weight of s in units of 1/f, before scaling.
  std::uint64_t pre_naive_units(Id s);
  /// Scaled sweep weight, raised to 1 by the least-id rule.
  double probe_weight(Id s);

  Mode mode() const { return mode_; }
  ProbeContext& context() { return ctx_; }

 private:
  ProbeContext& ctx_;
  Mode mode_;
};

/// Fractional per-set probe.
double main_probe_weight(ProbeContext& ctx, Id s);

/// Degree estimator for run_alg6 backed by a single shared context.
DegreeEstimator main_degree_estimator(ProbeContext& ctx);

}  // namespace lcasc

#endif  // LCASC_MAIN_LCA_HPP
