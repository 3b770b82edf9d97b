#include "lcasc/warmup_lca.hpp"

#include <algorithm>
#include <unordered_map>

namespace lcasc {

const char* to_string(Density d) {
  switch (d) {
    case Density::kDense:
      return "dense";
    case Density::kLight:
      return "light";
    case Density::kBad:
      return "bad";
  }
  return "?";
}

namespace {

struct CovCache {
  std::unordered_map<std::uint64_t, bool> covered;
};
struct WeightCache {
  std::unordered_map<Id, std::uint64_t> units;
};
struct WitnessCache {
  std::unordered_map<std::uint64_t, bool> covered;
};
struct InclusionCache {
  std::unordered_map<Id, std::optional<int>> first;
};

// Shared density test. `covered(i, j, e)` answers whether e is covered at
// the end of (i, j).
template <class Covered>
Density density_test(ProbeContext& ctx, Tag tag, int i, int j, Id s, Covered covered) {
  const AlgoParams& p = ctx.params();
  const std::size_t size = ctx.list_size(Vertex::set(s));
  if (pow2_times(i, size) < ctx.delta()) return Density::kLight;
  const Label label{.tag = tag,
                    .i = static_cast<std::uint8_t>(i),
                    .j = static_cast<std::uint8_t>(j),
                    .vertex = s};
  std::vector<Sampled> sample =
      sample_neighbors(ctx, Vertex::set(s), label, pow2_times(i, p.sample_scale), ctx.delta());
  // Entries are distinct ids, so erasing an entry removes every occurrence.
  const auto prune = [&](int pi, int pj) {
    std::erase_if(sample, [&](const Sampled& x) { return covered(pi, pj, x.id); });
  };
  for (int ip = 1; ip < i; ++ip) {
    prune(ip, p.log_f);
    if (sample.size() > pow2_times(i - ip + 2, p.sample_scale)) return Density::kBad;
  }
  prune(i, j - 1);
  return 2 * multiset_size(sample) >= p.sample_scale ? Density::kDense : Density::kLight;
}

}  // namespace

Density WarmupLca::is_set_dense(int i, int j, Id s) {
  ctx_.count_call();
  auto& cache = ctx_.cache<WarmupLca::Verdicts>().verdict;
  const std::uint64_t key = pack_key(i, j, 0, 0, 0, s);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kSetDenseOracle, i, j, 0});
  const Density d = density_test(ctx_, Tag::kWarmupSetSample, i, j, s,
                                 [this](int pi, int pj, Id e) { return is_ele_cov(pi, pj, e); });
  cache.emplace(key, d);
  return d;
}

bool WarmupLca::is_ele_cov(int i, int j, Id e) {
  ctx_.count_call();
  if (j == 0) return i > 1 && is_ele_cov(i - 1, ctx_.params().log_f, e);
  auto& cache = ctx_.cache<CovCache>().covered;
  const std::uint64_t key = pack_key(i, j, 0, 0, 0, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kEleCovOracle, i, j, 0});
  const bool result = [&] {
    if (is_ele_cov(i, j - 1, e)) return true;
    const AlgoParams& p = ctx_.params();
    const Label label{.tag = Tag::kWarmupElementSample,
                      .i = static_cast<std::uint8_t>(i),
                      .j = static_cast<std::uint8_t>(j),
                      .vertex = e};
    const auto sample = sample_neighbors(ctx_, Vertex::element(e), label,
                                         pow2_times(j, p.sample_scale), ctx_.freq());
    // Each pass at level k adds 2^(k-j)/scale; scaled by 2^j*scale to integers.
    const std::uint64_t target = pow2_times(j, p.sample_scale);
    std::uint64_t acc = 0;
    for (const Sampled& x : sample) {
      for (int k = 1; k <= j; ++k) {
        const Density d = is_set_dense(i, k, x.id);
        if (d == Density::kBad) return true;
        if (d == Density::kLight) break;
        acc += x.count * pow2_times(k, 1);
        if (acc >= target) return true;
      }
    }
    return false;
  }();
  cache.emplace(key, result);
  return result;
}

std::uint64_t WarmupLca::get_weight_units(Id s) {
  auto& cache = ctx_.cache<WeightCache>().units;
  if (auto it = cache.find(s); it != cache.end()) return it->second;
  const AlgoParams& p = ctx_.params();
  const std::uint64_t f = ctx_.freq();
  std::uint64_t units = 0;
  for (int i = 1; i <= p.log_delta; ++i) {
    for (int j = 1; j <= p.log_f; ++j) {
      const Density d = is_set_dense(i, j, s);
      if (d == Density::kLight) break;
      units = d == Density::kBad ? f : std::min(f, units + pow2_times(j, 1));
    }
  }
  cache.emplace(s, units);
  return units;
}

double WarmupLca::get_weight(Id s) {
  return static_cast<double>(get_weight_units(s)) / static_cast<double>(ctx_.freq());
}

double WarmupLca::lca_weight(Id s) {
  double w = get_weight(s);
  const std::size_t size = ctx_.list_size(Vertex::set(s));
  for (std::size_t idx = 0; idx < size && w < 1.0; ++idx) {
    const Id e = ctx_.neighbor(Vertex::set(s), idx);
    // Sorted adjacency: position 0 holds the least id.
    if (ctx_.neighbor(Vertex::element(e), 0) != s) continue;
    const std::size_t deg = ctx_.list_size(Vertex::element(e));
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      sum += get_weight_units(ctx_.neighbor(Vertex::element(e), k));
    }
    if (sum < ctx_.freq()) w = 1.0;
  }
  return w;
}

Density WarmupIntegralLca::is_set_dense(int i, int j, Id s) {
  ctx_.count_call();
  auto& cache = ctx_.cache<WarmupIntegralLca::Verdicts>().verdict;
  const std::uint64_t key = pack_key(i, j, 0, 0, 0, s);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kSetDenseOracle, i, j, 0});
  const Density d =
      density_test(ctx_, Tag::kIntegralWarmupSample, i, j, s,
                   [this](int pi, int pj, Id e) { return witnessed_cov(pi, pj, e); });
  cache.emplace(key, d);
  return d;
}

bool WarmupIntegralLca::witnessed_cov(int i, int j, Id e) {
  ctx_.count_call();
  if (j == 0) return i > 1 && witnessed_cov(i - 1, ctx_.params().log_f, e);
  auto& cache = ctx_.cache<WitnessCache>().covered;
  const std::uint64_t key = pack_key(i, j, 0, 0, 0, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CostScope scope(ctx_, {kEleCovOracle, i, j, 0});
  const bool result = [&] {
    if (witnessed_cov(i, j - 1, e)) return true;
    const AlgoParams& p = ctx_.params();
    const RoundingTape bits(ctx_.tape(), ctx_.freq());
    const Label label{.tag = Tag::kIntegralWarmupSample,
                      .i = static_cast<std::uint8_t>(i),
                      .j = static_cast<std::uint8_t>(j),
                      .vertex = e,
                      .counter = 1};
    const auto sample = sample_neighbors(ctx_, Vertex::element(e), label,
                                         pow2_times(j, p.sample_scale), ctx_.freq());
    for (const Sampled& x : sample) {
      // Only sets whose coin for (i, j) is 1 can join the cover now.
      if (!bits.bit(x.id, i, j)) continue;
      bool joined = true;
      for (int k = 1; k <= j && joined; ++k) {
        const Density d = is_set_dense(i, k, x.id);
        if (d == Density::kBad) return true;
        joined = d == Density::kDense;
      }
      if (joined) return true;
    }
    return false;
  }();
  cache.emplace(key, result);
  return result;
}

std::optional<int> WarmupIntegralLca::first_inclusion(Id s) {
  auto& cache = ctx_.cache<InclusionCache>().first;
  if (auto it = cache.find(s); it != cache.end()) return it->second;
  const AlgoParams& p = ctx_.params();
  const RoundingTape bits(ctx_.tape(), ctx_.freq());
  std::optional<int> first;
  for (int i = 1; i <= p.log_delta && !first; ++i) {
    for (int j = 1; j <= p.log_f && !first; ++j) {
      const Density d = is_set_dense(i, j, s);
      if (d == Density::kLight) break;
      if (d == Density::kBad || bits.bit(s, i, j)) first = p.t(i, j);
    }
  }
  cache.emplace(s, first);
  return first;
}

bool WarmupIntegralLca::probe(Id s) {
  if (first_inclusion(s)) return true;
  const std::size_t size = ctx_.list_size(Vertex::set(s));
  for (std::size_t idx = 0; idx < size; ++idx) {
    const Id e = ctx_.neighbor(Vertex::set(s), idx);
    if (ctx_.neighbor(Vertex::element(e), 0) != s) continue;
    const std::size_t deg = ctx_.list_size(Vertex::element(e));
    bool covered = false;
    for (std::size_t k = 0; k < deg && !covered; ++k) {
      covered = first_inclusion(ctx_.neighbor(Vertex::element(e), k)).has_value();
    }
    if (!covered) return true;
  }
  return false;
}

}  // namespace lcasc
