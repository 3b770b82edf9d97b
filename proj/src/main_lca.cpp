#include "lcasc/main_lca.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lcasc {

BoostFrame BoostFrame::at(int i, int j, int i_star, int j_star) {
  return {i, j, i_star, j_star, i == i_star ? j_star - j + 1 : j_star};
}

namespace {

template <MainLca::Mode M>
struct DegreeCache {
  std::unordered_map<std::uint64_t, DegreeOutcome> value;
};
struct WeightEstimateCache {
  std::unordered_map<std::uint64_t, bool> half;
};
struct CoveredCache {
  std::unordered_map<std::uint64_t, std::optional<Id>> witness;
};
template <MainLca::Mode M>
struct SweepCache {
  std::unordered_map<Id, SetSweep> sweeps;
  std::unordered_set<Id> running;
};

std::uint64_t key_of(const BoostFrame& fr, Id id) {
  return pack_key(fr.i, fr.j, fr.i_star, fr.j_star, fr.b, id);
}

Label frame_label(Tag tag, const BoostFrame& fr, Id vertex) {
  return {.tag = tag,
          .i = static_cast<std::uint8_t>(fr.i),
          .j = static_cast<std::uint8_t>(fr.j),
          .i_star = static_cast<std::uint8_t>(fr.i_star),
          .j_star = static_cast<std::uint8_t>(fr.j_star),
          .b = static_cast<std::uint16_t>(fr.b),
          .vertex = vertex};
}

// 2^e * K * scale.
std::uint64_t boosted(const AlgoParams& p, int e) { return pow2_times(e, p.K * p.sample_scale); }

template <MainLca::Mode M>
SweepCache<M>& sweeps_of(ProbeContext& ctx) {
  return ctx.cache<SweepCache<M>>();
}

}  // namespace

DegreeOutcome MainLca::degree_estimate(const BoostFrame& fr, Id s) {
  ctx_.count_call();
  if (fr.i == 0) return static_cast<double>(ctx_.list_size(Vertex::set(s)));
  auto& cache = mode_ == Mode::kFractional
                    ? ctx_.cache<DegreeCache<Mode::kFractional>>().value
                    : ctx_.cache<DegreeCache<Mode::kIntegral>>().value;
  const std::uint64_t key = key_of(fr, s);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kDegreeOracle, fr.i, fr.j, fr.b});
  const AlgoParams& p = ctx_.params();
  const int db = p.delta_boost * fr.b;
  const DegreeOutcome result = [&]() -> DegreeOutcome {
    if (fr.j > 1 && !degree_estimate(fr.with(fr.i, fr.j - 1, fr.b), s)) return std::nullopt;
    const std::uint64_t draws = boosted(p, fr.i + db);
    std::vector<Sampled> sample = sample_neighbors(
        ctx_, Vertex::set(s), frame_label(Tag::kDegreeSample, fr, s), draws, ctx_.delta());
    const auto covered = [&](const BoostFrame& at, Id e) {
      return mode_ == Mode::kFractional ? weight_estimate(at, e) >= 0.5
                                        : covered_estimate(at, e).has_value();
    };
    for (int ip = 1; ip < fr.i; ++ip) {
      const BoostFrame at = fr.with(ip, p.log_f, p.t(fr.i, fr.j) - p.t(ip, p.log_f));
      std::erase_if(sample, [&](const Sampled& x) { return covered(at, x.id); });
      if (multiset_size(sample) > boosted(p, fr.i - ip + db + p.delta_boost)) return std::nullopt;
    }
    for (int jp = 1; jp < fr.j; ++jp) {
      const BoostFrame at = fr.with(fr.i, jp, fr.j - jp);
      std::erase_if(sample, [&](const Sampled& x) { return covered(at, x.id); });
    }
    // Every draw lands with probability |S|/Δ, so this is unbiased for the
    // surviving fraction of S.
    return static_cast<double>(multiset_size(sample)) * static_cast<double>(ctx_.delta()) /
           static_cast<double>(draws);
  }();
  cache.emplace(key, result);
  return result;
}

double MainLca::weight_estimate(const BoostFrame& fr, Id e) {
  ctx_.count_call();
  const AlgoParams& p = ctx_.params();
  if (fr.j == 0) {
    return fr.i <= 1 ? 0.0 : weight_estimate(fr.with(fr.i - 1, p.log_f, fr.b), e);
  }
  auto& cache = ctx_.cache<WeightEstimateCache>().half;
  const std::uint64_t key = key_of(fr, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second ? 0.5 : 0.0;
  CostScope scope(ctx_, {kWeightOracle, fr.i, fr.j, fr.b});
  const int db = p.delta_boost * fr.b;
  const bool half = [&] {
    if (weight_estimate(fr.with(fr.i, fr.j - 1, fr.b), e) >= 0.5) return true;
    std::vector<Sampled> sample =
        sample_neighbors(ctx_, Vertex::element(e), frame_label(Tag::kWeightSample, fr, e),
                         boosted(p, fr.j + db + p.delta_boost), ctx_.freq());
    for (int jp = 1; jp <= fr.j; ++jp) {
      const BoostFrame at = fr.with(fr.i, jp, fr.b + fr.j - jp);
      std::erase_if(sample, [&](const Sampled& x) {
        const DegreeOutcome d = degree_estimate(at, x.id);
        return !d || *d * std::ldexp(1.0, fr.i) < static_cast<double>(ctx_.delta());
      });
      // Surviving fraction 2^-(jp+1) means about half a unit of weight from jp.
      if (multiset_size(sample) >= boosted(p, fr.j - jp + db + p.delta_boost - 1)) return true;
    }
    return false;
  }();
  cache.emplace(key, half);
  return half ? 0.5 : 0.0;
}

std::optional<Id> MainLca::covered_estimate(const BoostFrame& fr, Id e) {
  ctx_.count_call();
  const AlgoParams& p = ctx_.params();
  if (fr.i == 0) return std::nullopt;
  auto& cache = ctx_.cache<CoveredCache>().witness;
  const std::uint64_t key = key_of(fr, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kCoveredOracle, fr.i, fr.j, fr.b});
  const int db = p.delta_boost * fr.b;
  const std::optional<Id> witness = [&]() -> std::optional<Id> {
    const BoostFrame prev = fr.j == 1 ? fr.with(fr.i - 1, p.log_f, fr.b)
                                      : fr.with(fr.i, fr.j - 1, fr.b);
    if (auto w = covered_estimate(prev, e)) return w;
    const RoundingTape bits(ctx_.tape(), ctx_.freq());
    const std::size_t deg = ctx_.list_size(Vertex::element(e));
    std::vector<Id> candidates;
    for (std::size_t k = 0; k < deg; ++k) {
      const Id s = ctx_.neighbor(Vertex::element(e), k);
      if (bits.bit(s, fr.i, fr.j)) candidates.push_back(s);
    }
    const std::uint64_t cap = boosted(p, fr.j + db);
    if (candidates.size() > cap) {
      Stream pick = ctx_.tape().stream(frame_label(Tag::kTruncate, fr, e));
      for (std::size_t k = 0; k < cap; ++k) {
        std::swap(candidates[k], candidates[k + pick.uniform(candidates.size() - k)]);
      }
      candidates.resize(cap);
      std::sort(candidates.begin(), candidates.end());
    }
    const int t = p.t(fr.i, fr.j);
    for (int jp = 1; jp <= fr.j; ++jp) {
      const BoostFrame at = fr.with(fr.i, jp, fr.b + fr.j - jp);
      for (Id s : candidates) {
        const DegreeOutcome d = degree_estimate(at, s);
        if (!d || *d * std::ldexp(1.0, fr.i) < static_cast<double>(ctx_.delta())) continue;
        // Report only sets whose own sweep has put them in the cover.
        if (sweep(s, t).in_cover_by(t)) return s;
      }
      if (candidates.size() > boosted(p, fr.j - jp + p.delta_boost + db)) return std::nullopt;
    }
    return std::nullopt;
  }();
  cache.emplace(key, witness);
  return witness;
}

const SetSweep& MainLca::sweep(Id s, int t) {
  const auto run = [&](auto& cache) -> const SetSweep& {
    auto [it, inserted] = cache.sweeps.try_emplace(s, ctx_.params(), ctx_.delta(), ctx_.freq());
    SetSweep& sw = it->second;
    if (sw.progress() >= std::min(t, ctx_.params().num_iterations())) return sw;
    if (!cache.running.insert(s).second) {
      throw std::logic_error("retroactive sweep re-entered beyond its committed history");
    }
    const SetSweep::Estimate est = [&](int ip, int jp, int i, int j) {
      return degree_estimate(BoostFrame::at(ip, jp, i, j), s);
    };
    SetSweep::Bit bit;
    if (mode_ == Mode::kIntegral) {
      bit = [&](int ip, int jp) { return RoundingTape(ctx_.tape(), ctx_.freq()).bit(s, ip, jp); };
    }
    sw.advance_to(t, est, bit);
    cache.running.erase(s);
    return sw;
  };
  return mode_ == Mode::kFractional ? run(sweeps_of<Mode::kFractional>(ctx_))
                                    : run(sweeps_of<Mode::kIntegral>(ctx_));
}

std::uint64_t MainLca::pre_naive_units(Id s) {
  return sweep(s, ctx_.params().num_iterations()).units();
}

double MainLca::probe_weight(Id s) {
  const std::uint64_t f = ctx_.freq();
  const std::uint64_t factor = ctx_.params().scale_by_four ? 4 : 1;
  double w = static_cast<double>(factor * pre_naive_units(s)) / static_cast<double>(f);
  const std::size_t size = ctx_.list_size(Vertex::set(s));
  for (std::size_t idx = 0; idx < size && w < 1.0; ++idx) {
    const Id e = ctx_.neighbor(Vertex::set(s), idx);
    if (ctx_.neighbor(Vertex::element(e), 0) != s) continue;
    const std::size_t deg = ctx_.list_size(Vertex::element(e));
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      sum += pre_naive_units(ctx_.neighbor(Vertex::element(e), k));
    }
    if (factor * sum < f) w = 1.0;
  }
  return w;
}

double main_probe_weight(ProbeContext& ctx, Id s) { return MainLca(ctx).probe_weight(s); }

DegreeEstimator main_degree_estimator(ProbeContext& ctx) {
  return [&ctx](int ip, int jp, int i, int j, Id s) {
    return MainLca(ctx).degree_estimate(BoostFrame::at(ip, jp, i, j), s);
  };
}

}  // namespace lcasc
