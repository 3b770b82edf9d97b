#ifndef LCASC_BENCH_HPP
#define LCASC_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcasc/access.hpp"
#include "lcasc/instance.hpp"

namespace lcasc {

/// Local algorithms the harness can sweep.
inline const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names = {"warmup", "main", "integral", "warmup-integral"};
  return names;
}

struct BenchRecord {
  std::string algorithm;
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t f = 0;
  std::string params;
  double cover_cost = 0.0;
  double baseline_cost = 0.0;
  double ratio = 0.0;
  std::uint64_t queries_max = 0;
  double queries_mean = 0.0;
  double wall_millis = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

struct BenchGrid {
  std::vector<std::string> algorithms;
  std::vector<GeneratorSpec> families;
  std::vector<std::uint64_t> seeds;
  ParamOverrides overrides;

  std::size_t cardinality() const { return algorithms.size() * families.size() * seeds.size(); }

  /// Block-planted instances over Δ in {4, 8, 16, 32} and f in {2, 4, 8},
  /// two seeds, every local algorithm.
  static BenchGrid default_grid();
  /// A few seconds' worth of cells for tests.
  static BenchGrid smoke();
  /// Throws std::invalid_argument for unknown names.
  static BenchGrid named(const std::string& name);
};

struct BenchCell {
  std::string algorithm;
  GeneratorSpec family;
  std::uint64_t seed;
};

struct BenchResult {
  BenchRecord record;
  CallRecorder recorder;
};

/// Probes every set of generate_instance(family, seed) with a fresh context
/// per probe, so the query statistics are per-probe counts.
BenchResult run_bench_cell(const BenchCell& cell, const ParamOverrides& overrides);

struct BenchOutcome {
  /// Sorted by (algorithm, instance, seed).
  std::vector<BenchRecord> records;
  /// Worst-case recursive costs merged across all cells.
  CallRecorder recorder;
  /// Recorder per grid cell in record order.
  std::vector<CallRecorder> cell_recorders;
};

BenchOutcome run_bench(const BenchGrid& grid, unsigned threads);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace lcasc

#endif  // LCASC_BENCH_HPP
