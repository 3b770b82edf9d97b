#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "fixtures.hpp"
#include "lcasc/bench.hpp"
#include "lcasc/main_lca.hpp"
#include "lcasc/random_tape.hpp"
#include "lcasc/reference.hpp"

using namespace lcasc;

namespace {

struct Probe {
  SetCoverInstance inst;
  RandomTape tape;
  AlgoParams params;
  ProbeContext ctx;

  Probe(SetCoverInstance i, std::uint64_t seed, ParamOverrides ov = {})
      : inst(std::move(i)), tape(seed), params(AlgoParams::derive(inst, ov)), ctx(inst, tape, params) {}
};

}  // namespace

TEST_CASE("degree estimate base case reads the set size") {
  Probe p(fixture::small_uniform(5), 1);
  MainLca lca(p.ctx);
  for (Id s = 0; s < p.inst.num_sets(); ++s) {
    const DegreeOutcome d = lca.degree_estimate({0, 1, 1, 1, 1}, s);
    REQUIRE(d.has_value());
    CHECK(*d == double(p.inst.members(s).size()));
  }
}

TEST_CASE("empty set estimates to zero") {
  Probe p(fixture::make(3, {{0, 1, 2}, {}}), 1);
  const DegreeOutcome d = MainLca(p.ctx).degree_estimate(BoostFrame::at(1, 1, 1, 1), 1);
  REQUIRE(d.has_value());
  CHECK(*d == 0.0);
}

TEST_CASE("full set with no filtering estimates its exact size") {
  // Every draw lands, so survivors * delta / draws = delta = |S|.
  for (std::size_t f : {1, 2, 4}) {
    Probe p(fixture::complete_bipartite(f, 8), 2);
    MainLca lca(p.ctx);
    for (Id s = 0; s < f; ++s) {
      const DegreeOutcome d = lca.degree_estimate(BoostFrame::at(1, 1, 1, 1), s);
      REQUIRE(d.has_value());
      CHECK(*d == 8.0);
    }
  }
}

TEST_CASE("weight estimate base case and light neighborhoods") {
  // Element 8 lies only in singletons; Δ = 8 so they are light in phase 1.
  Probe p(fixture::make(9, {{0, 1, 2, 3, 4, 5, 6, 7}, {8}, {8}}), 4);
  MainLca lca(p.ctx);
  CHECK(lca.weight_estimate({1, 0, 1, 1, 1}, 8) == 0.0);
  CHECK(lca.weight_estimate(BoostFrame::at(1, 1, 1, 1), 8) == 0.0);
}

TEST_CASE("element in dense sets estimates half weight") {
  // D holds 2^(1+δb+δ) K scale draws, all landing on sets estimated at Δ;
  // the first threshold is 2^(δb+δ) K scale.
  for (std::size_t f : {2, 4, 8}) {
    Probe p(fixture::complete_bipartite(f, 8), 6);
    MainLca lca(p.ctx);
    for (Id e = 0; e < 8; ++e) CHECK(lca.weight_estimate(BoostFrame::at(1, 1, 1, 1), e) == 0.5);
  }
}

TEST_CASE("saturating set scales to 4") {
  Probe p(generate_instance(StarFamily{8}, 1).instance, 1);
  MainLca lca(p.ctx);
  CHECK(lca.pre_naive_units(0) == p.inst.freq());
  CHECK(lca.probe_weight(0) == 4.0);
  Probe q(generate_instance(StarFamily{8}, 1).instance, 1, {.scale_by_four = false});
  CHECK(MainLca(q.ctx).probe_weight(0) == 1.0);
}

TEST_CASE("failing sweep leaves zero before covering") {
  const SetCoverInstance inst = fixture::small_uniform(9);
  const AlgoParams params = AlgoParams::derive(inst);
  SetSweep sweep(params, inst.delta(), inst.freq());
  sweep.advance_to(params.num_iterations(), [](int, int, int, int) { return std::nullopt; });
  CHECK(sweep.units() == 0);
  CHECK(sweep.triggers().empty());
}

TEST_CASE("probed main weights form a fractional cover") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Probe p(generate_instance(UniformRandomFamily{50, 20, 1 + seed % 4}, seed).instance, seed);
    FractionalCover cover;
    for (Id s = 0; s < p.inst.num_sets(); ++s) {
      const double w = main_probe_weight(p.ctx, s);
      CHECK(w >= 0.0);
      CHECK(w <= 4.0);
      cover.weight.push_back(w);
    }
    CHECK_FALSE(cover.first_uncovered(p.inst).has_value());
  }
}

TEST_CASE("frames with different boost targets draw fresh samples") {
  Probe p(generate_instance(BlockPlantedFamily{3, 16, 4}, 2).instance, 2, {.sample_scale = 2, .K = 1});
  MainLca lca(p.ctx);
  // Same (i, j) and b, different (i*, j*).
  const BoostFrame a{1, 1, 2, 1, 1};
  const BoostFrame b{1, 1, 3, 1, 1};
  int differ = 0;
  for (Id s = 0; s < p.inst.num_sets(); ++s) {
    if (lca.degree_estimate(a, s) != lca.degree_estimate(b, s)) ++differ;
  }
  CHECK(differ > 0);
}

TEST_CASE("boost raises sample sizes and query counts") {
  const SetCoverInstance inst = generate_instance(BlockPlantedFamily{3, 16, 4}, 5).instance;
  std::uint64_t previous = 0;
  for (int b = 1; b <= 3; ++b) {
    const RandomTape tape(1);
    ProbeContext ctx(inst, tape, AlgoParams::derive(inst, {.sample_scale = 1, .K = 1}));
    MainLca(ctx).degree_estimate({1, 1, 1, 1, b}, 0);
    CHECK(ctx.query_count() >= previous);
    previous = ctx.query_count();
  }
}

TEST_CASE("recursive call counts obey the boosted power bound") {
  const BenchGrid grid = BenchGrid::smoke();
  const BenchOutcome out = run_bench(grid, 2);
  for (std::size_t k = 0; k < out.records.size(); ++k) {
    const BenchRecord& r = out.records[k];
    if (r.algorithm != "main" && r.algorithm != "integral") continue;
    const GeneratorSpec spec = grid.families[r.instance.rfind("star", 0) == 0 ? 0 : 1];
    const AlgoParams p = AlgoParams::derive(generate_instance(spec, r.seed).instance);
    const double log_c = (p.delta_boost + 3) * std::log(4.0) + 2 * std::log(double(p.K)) +
                         2 * std::log(double(p.sample_scale));
    for (const auto& [key, cost] : out.cell_recorders[k].worst()) {
      const double t = p.t(key.i, key.j) + (key.kind == kDegreeOracle ? 0.0 : 0.5);
      const double bound = t * log_c + p.delta_boost * key.b * std::log(2.0);
      CHECK(std::log(double(std::max<std::uint64_t>(1, cost.calls))) <= bound);
    }
  }
}

TEST_CASE("degree estimate error frequencies stay within twice their bounds") {
  // Conditions use the exact per-element weights of the global run that the
  // probes simulate on the same tape; frequencies are taken over 10^4 seeds.
  const SetCoverInstance inst = generate_instance(BlockPlantedFamily{2, 8, 2}, 1).instance;
  const AlgoParams params = AlgoParams::derive(inst);
  const double delta = double(inst.delta());
  const double f = double(inst.freq());
  const int T = params.num_iterations();

  struct Tally {
    std::uint64_t events = 0;
    std::uint64_t errors = 0;
    double bound = 0;
  };
  std::map<std::tuple<int, int, int>, Tally> tallies;  // (t, t*, kind)
  constexpr std::uint64_t kSeeds = 10000;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const RandomTape tape(seed);
    ProbeContext ctx(inst, tape, params);
    const RunTrace trace = run_alg6(inst, params, main_degree_estimator(ctx)).trace;
    // (d+ condition, d- condition) per set at the start of each iteration.
    std::vector<std::vector<std::pair<bool, bool>>> cond(T + 1);
    std::vector<double> weight(inst.num_elements(), 0.0);
    for (int t = 1; t <= T; ++t) {
      const int i = (t - 1) / params.log_f + 1;
      for (Id s = 0; s < inst.num_sets(); ++s) {
        double d_plus = 0, d_minus = 0;
        for (Id e : inst.members(s)) {
          d_plus += weight[e] < 0.25 ? 1 : 0;
          d_minus += weight[e] < 1.0 ? 1 : 0;
        }
        cond[t].emplace_back(d_plus >= delta / std::ldexp(1.0, i - 1),
                             d_minus < delta / std::ldexp(1.0, i + 3));
      }
      for (Id s = 0; s < inst.num_sets(); ++s) {
        for (Id e : inst.members(s)) weight[e] += double(trace.added[t - 1][s]) / f;
      }
    }
    MainLca lca(ctx);
    for (int ts = 1; ts <= T; ++ts) {
      const int is = (ts - 1) / params.log_f + 1;
      const int js = (ts - 1) % params.log_f + 1;
      for (int t = 1; t <= ts; ++t) {
        const int i = (t - 1) / params.log_f + 1;
        const int j = (t - 1) % params.log_f + 1;
        const BoostFrame fr = BoostFrame::at(i, j, is, js);
        const double threshold = delta / std::ldexp(1.0, i);
        for (Id s = 0; s < inst.num_sets(); ++s) {
          const auto [need_under, need_over] = cond[t][s];
          if (!need_under && !need_over) continue;
          const DegreeOutcome d = lca.degree_estimate(fr, s);
          if (need_under) {
            Tally& tl = tallies[{t, ts, 0}];
            tl.bound = 0.125 / std::ldexp(1.0, is - i);
            ++tl.events;
            tl.errors += (!d || *d < threshold) ? 1 : 0;
          }
          if (need_over) {
            Tally& tl = tallies[{t, ts, 1}];
            tl.bound = std::pow(8.0, -fr.b) / std::ldexp(1.0, is - i);
            ++tl.events;
            tl.errors += (d && *d >= threshold) ? 1 : 0;
          }
        }
      }
    }
  }
  std::uint64_t events = 0;
  for (const auto& [key, tl] : tallies) {
    const auto [t, ts, kind] = key;
    CAPTURE(t);
    CAPTURE(ts);
    CAPTURE(kind);
    CAPTURE(tl.events);
    CAPTURE(tl.errors);
    CHECK(double(tl.errors) / double(tl.events) <= 2.0 * tl.bound);
    events += tl.events;
  }
  CHECK(events >= kSeeds);
}
