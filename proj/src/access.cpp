#include "lcasc/access.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcasc {

int clamped_log2(std::size_t x) {
  int k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return std::max(k, 1);
}

AlgoParams AlgoParams::derive(const SetCoverInstance& inst, const ParamOverrides& overrides) {
  AlgoParams p;
  p.log_delta = clamped_log2(inst.delta());
  p.log_f = clamped_log2(inst.freq());
  p.L = p.log_delta * p.log_f;
  const auto L = static_cast<std::uint64_t>(p.L);
  p.sample_scale = overrides.sample_scale.value_or(L * L * L);
  p.K = overrides.K.value_or(8);
  p.delta_boost = overrides.delta_boost.value_or(2);
  p.scale_by_four = overrides.scale_by_four.value_or(true);
  if (p.sample_scale == 0 || p.K == 0 || p.delta_boost <= 0) {
    throw InfeasibleParams("sample_scale, K and delta_boost must be positive");
  }
  return p;
}

std::string AlgoParams::fingerprint() const {
  return "scale=" + std::to_string(sample_scale) + ";K=" + std::to_string(K) +
         ";delta=" + std::to_string(delta_boost) + ";x4=" + (scale_by_four ? "1" : "0");
}

void CallRecorder::record(const Key& key, Cost cost) {
  auto& w = worst_[key];
  w.calls = std::max(w.calls, cost.calls);
  w.queries = std::max(w.queries, cost.queries);
}

void CallRecorder::merge(const CallRecorder& other) {
  for (const auto& [key, cost] : other.worst_) record(key, cost);
}

ProbeContext::ProbeContext(const SetCoverInstance& inst, const RandomTape& tape,
                           const AlgoParams& params)
    : inst_(&inst), tape_(&tape), params_(params) {}

Id ProbeContext::neighbor(Vertex v, std::size_t idx) {
  const auto list = v.kind == Vertex::Kind::kSet ? inst_->members(v.id) : inst_->sets_of(v.id);
  if (idx >= list.size()) {
    throw std::out_of_range("neighbor index " + std::to_string(idx) + " out of range");
  }
  ++queries_;
  return list[idx];
}

std::size_t ProbeContext::list_size(Vertex v) {
  ++queries_;
  return v.kind == Vertex::Kind::kSet ? inst_->members(v.id).size() : inst_->sets_of(v.id).size();
}

std::vector<Sampled> sample_neighbors(ProbeContext& ctx, Vertex v, const Label& label,
                                      std::uint64_t t, std::uint64_t m) {
  const std::size_t size = ctx.list_size(v);
  std::vector<Sampled> out;
  for (const Drawn& d : sample_positions(ctx.tape(), label, size, t, m)) {
    out.push_back({ctx.neighbor(v, d.position), d.count});
  }
  return out;
}

}  // namespace lcasc
