#ifndef LCASC_INTEGRAL_HPP
#define LCASC_INTEGRAL_HPP

#include <optional>

#include "lcasc/access.hpp"
#include "lcasc/main_lca.hpp"

namespace lcasc {

/// Frame at the last iteration, boosted as a top-level call.
BoostFrame final_frame(const AlgoParams& p);

/// Did a trigger of s with rounding bit 1 fire by the end of (i, j)?
bool in_cover_by(ProbeContext& ctx, Id s, int i, int j);

std::optional<Id> covered_estimate(ProbeContext& ctx, const BoostFrame& frame, Id e);

/// Is s in the integral cover? Either a trigger fired with bit 1, or s is
/// the least-id set of an element for which no covering set was witnessed.
bool integral_probe_set(ProbeContext& ctx, Id s);

/// A set in the integral cover that contains e.
Id integral_probe_element(ProbeContext& ctx, Id e);

bool warmup_integral_probe(ProbeContext& ctx, Id s);
/// Iteration at which s joins the warmup integral cover before the covering
/// pass, if it does.
std::optional<int> warmup_integral_first_inclusion(ProbeContext& ctx, Id s);

}  // namespace lcasc

#endif  // LCASC_INTEGRAL_HPP
