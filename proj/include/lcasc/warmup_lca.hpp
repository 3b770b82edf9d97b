#ifndef LCASC_WARMUP_LCA_HPP
#define LCASC_WARMUP_LCA_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "lcasc/access.hpp"

namespace lcasc {

enum class Density : std::uint8_t { kDense, kLight, kBad };

const char* to_string(Density d);

/// Sampling-based density and coverage tests, and the fractional weight
/// probes built on them. All state lives in the context's caches.
class WarmupLca {
 public:
  /// Density memo, keyed by pack_key(i, j, 0, 0, 0, s).
  struct Verdicts {
    std::unordered_map<std::uint64_t, Density> verdict;
  };

  explicit WarmupLca(ProbeContext& ctx) : ctx_(ctx) {}

  /// Is `s` dense at the start of iteration (i, j)?
  Density is_set_dense(int i, int j, Id s);
  /// Is `e` covered at the end of iteration (i, j)? j = 0 is the end of
  /// phase i - 1.
  bool is_ele_cov(int i, int j, Id e);

  /// Weight before the covering pass, in units of 1/f.
  std::uint64_t get_weight_units(Id s);
  double get_weight(Id s);
  /// get_weight raised to 1 when s is the least-id set of an element whose
  /// summed get_weight stays below 1.
  double lca_weight(Id s);

 private:
  ProbeContext& ctx_;
};

/// Integral variant: a Dense verdict at (i, j) puts the set in the cover
/// when its rounding bit for (i, j) is 1; Bad puts it in unconditionally.
/// Elements count as covered only through a sampled, verified in-cover set.
class WarmupIntegralLca {
 public:
  struct Verdicts {
    std::unordered_map<std::uint64_t, Density> verdict;
  };

  explicit WarmupIntegralLca(ProbeContext& ctx) : ctx_(ctx) {}

  Density is_set_dense(int i, int j, Id s);
  /// True if a sampled set containing e is seen to join the cover at (i, j),
  /// or was seen doing so at an earlier iteration.
  bool witnessed_cov(int i, int j, Id e);

  /// Iteration t at which s joins the cover before the covering pass.
  std::optional<int> first_inclusion(Id s);
  bool probe(Id s);

 private:
  ProbeContext& ctx_;
};

}  // namespace lcasc

#endif  // LCASC_WARMUP_LCA_HPP
