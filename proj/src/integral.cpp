#include "lcasc/integral.hpp"

#include "lcasc/warmup_lca.hpp"

namespace lcasc {

BoostFrame final_frame(const AlgoParams& p) {
  return BoostFrame::at(p.log_delta, p.log_f, p.log_delta, p.log_f);
}

bool in_cover_by(ProbeContext& ctx, Id s, int i, int j) {
  const int t = ctx.params().t(i, j);
  return MainLca(ctx, MainLca::Mode::kIntegral).sweep(s, t).in_cover_by(t);
}

std::optional<Id> covered_estimate(ProbeContext& ctx, const BoostFrame& frame, Id e) {
  return MainLca(ctx, MainLca::Mode::kIntegral).covered_estimate(frame, e);
}

bool integral_probe_set(ProbeContext& ctx, Id s) {
  MainLca lca(ctx, MainLca::Mode::kIntegral);
  const int T = ctx.params().num_iterations();
  if (lca.sweep(s, T).in_cover_by(T)) return true;
  const BoostFrame last = final_frame(ctx.params());
  const std::size_t size = ctx.list_size(Vertex::set(s));
  for (std::size_t idx = 0; idx < size; ++idx) {
    const Id e = ctx.neighbor(Vertex::set(s), idx);
    if (ctx.neighbor(Vertex::element(e), 0) != s) continue;
    if (!lca.covered_estimate(last, e)) return true;
  }
  return false;
}

Id integral_probe_element(ProbeContext& ctx, Id e) {
  if (auto w = covered_estimate(ctx, final_frame(ctx.params()), e)) return *w;
  return ctx.neighbor(Vertex::element(e), 0);
}

bool warmup_integral_probe(ProbeContext& ctx, Id s) { return WarmupIntegralLca(ctx).probe(s); }

std::optional<int> warmup_integral_first_inclusion(ProbeContext& ctx, Id s) {
  return WarmupIntegralLca(ctx).first_inclusion(s);
}

}  // namespace lcasc
