#include "lcasc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lcasc/integral.hpp"
#include "lcasc/main_lca.hpp"
#include "lcasc/reference.hpp"
#include "lcasc/warmup_lca.hpp"

namespace lcasc {

std::string BenchRecord::csv_header() {
  return "algorithm,instance,seed,n,m,delta,f,params,cover_cost,baseline_cost,ratio,"
         "queries_max,queries_mean,wall_millis";
}

std::string BenchRecord::csv_row() const {
  char nums[160];
  std::snprintf(nums, sizeof nums, "%.6f,%.6f,%.6f,%llu,%.3f,%.3f", cover_cost, baseline_cost,
                ratio, static_cast<unsigned long long>(queries_max), queries_mean, wall_millis);
  return algorithm + "," + instance + "," + std::to_string(seed) + "," + std::to_string(n) + "," +
         std::to_string(m) + "," + std::to_string(delta) + "," + std::to_string(f) + "," + params +
         "," + nums;
}

BenchGrid BenchGrid::default_grid() {
  BenchGrid g;
  g.algorithms = bench_algorithms();
  for (std::size_t delta : {4, 8, 16, 32}) {
    for (std::size_t f : {2, 4, 8}) g.families.push_back(BlockPlantedFamily{3, delta, f});
  }
  g.seeds = {1, 2};
  return g;
}

BenchGrid BenchGrid::smoke() {
  BenchGrid g;
  g.algorithms = bench_algorithms();
  g.families = {StarFamily{8}, BlockPlantedFamily{2, 4, 2}};
  g.seeds = {1};
  return g;
}

BenchGrid BenchGrid::named(const std::string& name) {
  if (name == "default") return default_grid();
  if (name == "smoke") return smoke();
  throw std::invalid_argument("unknown grid '" + name + "'");
}

namespace {

double baseline_of(const GeneratedInstance& g) {
  if (g.planted_cover) return static_cast<double>(g.planted_cover->size());
  if (g.instance.num_sets() <= kExactCoverMaxSets) {
    return static_cast<double>(exact_cover(g.instance).size());
  }
  return static_cast<double>(greedy_cover(g.instance).size());
}

// Answer of one fresh-context probe of set s, as a cost contribution.
double probe_cost(const std::string& algorithm, ProbeContext& ctx, Id s) {
  if (algorithm == "warmup") return WarmupLca(ctx).lca_weight(s);
  if (algorithm == "main") return main_probe_weight(ctx, s);
  if (algorithm == "integral") return integral_probe_set(ctx, s) ? 1.0 : 0.0;
  if (algorithm == "warmup-integral") return warmup_integral_probe(ctx, s) ? 1.0 : 0.0;
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

}  // namespace

BenchResult run_bench_cell(const BenchCell& cell, const ParamOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  const GeneratedInstance g = generate_instance(cell.family, cell.seed);
  const SetCoverInstance& inst = g.instance;
  const AlgoParams params = AlgoParams::derive(inst, overrides);
  const RandomTape tape(cell.seed);
  BenchResult out;
  BenchRecord& r = out.record;
  r.algorithm = cell.algorithm;
  r.instance = describe(cell.family);
  r.seed = cell.seed;
  r.n = inst.num_elements();
  r.m = inst.num_sets();
  r.delta = inst.delta();
  r.f = inst.freq();
  r.params = params.fingerprint();
  std::uint64_t total_queries = 0;
  for (Id s = 0; s < inst.num_sets(); ++s) {
    ProbeContext ctx(inst, tape, params);
    r.cover_cost += probe_cost(cell.algorithm, ctx, s);
    r.queries_max = std::max(r.queries_max, ctx.query_count());
    total_queries += ctx.query_count();
    out.recorder.merge(ctx.recorder());
  }
  r.queries_mean = static_cast<double>(total_queries) / static_cast<double>(inst.num_sets());
  r.baseline_cost = baseline_of(g);
  r.ratio = r.cover_cost / r.baseline_cost;
  r.wall_millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

BenchOutcome run_bench(const BenchGrid& grid, unsigned threads) {
  std::vector<BenchCell> cells;
  for (const auto& algorithm : grid.algorithms) {
    for (const auto& family : grid.families) {
      for (std::uint64_t seed : grid.seeds) cells.push_back({algorithm, family, seed});
    }
  }
  std::vector<BenchResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      results[k] = run_bench_cell(cells[k], grid.overrides);
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(results.begin(), results.end(), [](const BenchResult& a, const BenchResult& b) {
    const auto& x = a.record;
    const auto& y = b.record;
    return std::tie(x.algorithm, x.instance, x.seed) < std::tie(y.algorithm, y.instance, y.seed);
  });
  BenchOutcome outcome;
  for (auto& res : results) {
    outcome.recorder.merge(res.recorder);
    outcome.records.push_back(std::move(res.record));
    outcome.cell_recorders.push_back(std::move(res.recorder));
  }
  return outcome;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << BenchRecord::csv_header() << '\n';
  for (const auto& r : records) out << r.csv_row() << '\n';
}

}  // namespace lcasc
