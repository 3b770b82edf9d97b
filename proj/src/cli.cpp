#include "lcasc/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "lcasc/bench.hpp"
#include "lcasc/estimator.hpp"
#include "lcasc/integral.hpp"
#include "lcasc/main_lca.hpp"
#include "lcasc/reference.hpp"
#include "lcasc/warmup_lca.hpp"

namespace lcasc {

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> K;
  std::optional<int> delta_boost;
  std::optional<std::uint64_t> sample_scale;
  bool no_scale_by_four = false;
  std::string cache = "per-probe";

  std::string family = "star";
  std::size_t delta = 8;
  std::size_t f = 2;
  std::size_t n = 100;
  std::size_t m = 40;
  std::size_t opt = 5;
  std::string out_path;

  std::string instance_path;
  std::string algorithm;
  std::string policy = "identity";
  double ell = 1.0;
  double r = 1.0;
  std::string estimator = "main";

  std::string kind = "set";
  std::uint64_t id = 0;

  bool header = false;
  std::string grid = "default";
  unsigned threads = 0;
};

// Raised for failures that map to the invalid-input exit code.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParamOverrides overrides_of(const Options& o) {
  ParamOverrides ov;
  ov.K = o.K;
  ov.delta_boost = o.delta_boost;
  ov.sample_scale = o.sample_scale;
  if (o.no_scale_by_four) ov.scale_by_four = false;
  return ov;
}

SetCoverInstance read_instance(const std::string& path) {
  try {
    return load_instance(path);
  } catch (const std::exception& e) {
    throw Invalid(e.what());
  }
}

std::string fixed(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string verdict_text(const CoverVerdict& v) {
  if (is_ok(v)) return "ok";
  return "uncovered:" + std::to_string(std::get<Uncovered>(v).element);
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorSpec spec;
  if (o.family == "star") {
    spec = StarFamily{o.delta};
  } else if (o.family == "uniform") {
    spec = UniformRandomFamily{o.n, o.m, o.f};
  } else {
    spec = BlockPlantedFamily{o.opt, o.delta, o.f};
  }
  const GeneratedInstance g = generate_instance(spec, o.seed);
  save_instance(g.instance, o.out_path);
  out << "wrote " << o.out_path << " family=" << describe(spec)
      << " sets=" << g.instance.num_sets() << " elements=" << g.instance.num_elements()
      << " delta=" << g.instance.delta() << " f=" << g.instance.freq();
  if (g.planted_cover) out << " planted=" << g.planted_cover->size();
  out << '\n';
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const SetCoverInstance inst = read_instance(o.instance_path);
  out << "algorithm=" << o.algorithm << ' ';
  if (o.algorithm == "greedy" || o.algorithm == "exact") {
    const IntegralCover c = o.algorithm == "greedy" ? greedy_cover(inst) : exact_cover(inst);
    const CoverVerdict v = validate_cover(inst, c);
    out << "cost=" << c.size() << " valid=" << verdict_text(v) << '\n';
    return is_ok(v) ? kExitOk : kExitInvalid;
  }
  FractionalRun run;
  if (o.algorithm == "alg1") {
    run = run_alg1(inst);
  } else if (o.algorithm == "alg2") {
    const SlackPolicy policy = o.policy == "identity" ? SlackPolicy::identity(inst)
                                                      : SlackPolicy::random(inst, o.ell, o.r, o.seed);
    run = run_alg2(inst, policy);
  } else {
    const AlgoParams params = AlgoParams::derive(inst, overrides_of(o));
    const RandomTape tape(o.seed);
    ProbeContext ctx(inst, tape, params);
    if (o.estimator == "exact") {
      const FractionalRun base = run_alg1(inst);
      run = run_alg6(inst, params, exact_degree_estimator(base.trace));
    } else if (o.estimator == "fail") {
      run = run_alg6(inst, params, always_fail_estimator());
    } else {
      run = run_alg6(inst, params, main_degree_estimator(ctx));
    }
  }
  const auto uncovered = run.cover.first_uncovered(inst);
  out << "cost=" << fixed(run.cover.total())
      << " valid=" << (uncovered ? "uncovered:" + std::to_string(*uncovered) : "ok") << '\n';
  return uncovered ? kExitInvalid : kExitOk;
}

int cmd_probe(const Options& o, std::ostream& out) {
  const SetCoverInstance inst = read_instance(o.instance_path);
  const bool set_kind = o.kind == "set";
  const std::size_t bound = set_kind ? inst.num_sets() : inst.num_elements();
  if (o.id >= bound) throw Invalid("id " + std::to_string(o.id) + " out of range");
  const AlgoParams params = AlgoParams::derive(inst, overrides_of(o));
  const RandomTape tape(o.seed);
  ProbeContext ctx(inst, tape, params);
  const Id id = static_cast<Id>(o.id);
  out << "algorithm=" << o.algorithm << " kind=" << o.kind << " id=" << id << ' ';
  const auto set_weight = [&](Id s) {
    return o.algorithm == "warmup" ? WarmupLca(ctx).lca_weight(s) : main_probe_weight(ctx, s);
  };
  const bool fractional = o.algorithm == "warmup" || o.algorithm == "main";
  if (set_kind && fractional) {
    out << "weight=" << fixed(set_weight(id));
  } else if (set_kind) {
    const bool in = o.algorithm == "integral" ? integral_probe_set(ctx, id)
                                              : warmup_integral_probe(ctx, id);
    out << "in_cover=" << (in ? 1 : 0);
  } else if (fractional) {
    double w = 0.0;
    const std::size_t deg = ctx.list_size(Vertex::element(id));
    for (std::size_t k = 0; k < deg; ++k) w += set_weight(ctx.neighbor(Vertex::element(id), k));
    out << "weight=" << fixed(w);
  } else if (o.algorithm == "integral") {
    out << "set=" << integral_probe_element(ctx, id);
  } else {
    Id chosen = ctx.neighbor(Vertex::element(id), 0);
    const std::size_t deg = ctx.list_size(Vertex::element(id));
    for (std::size_t k = 0; k < deg; ++k) {
      const Id s = ctx.neighbor(Vertex::element(id), k);
      if (warmup_integral_first_inclusion(ctx, s)) {
        chosen = s;
        break;
      }
    }
    out << "set=" << chosen;
  }
  out << " queries=" << ctx.query_count() << '\n';
  return kExitOk;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  const SetCoverInstance inst = read_instance(o.instance_path);
  const AlgoParams params = AlgoParams::derive(inst, overrides_of(o));
  const CacheMode mode = o.cache == "shared" ? CacheMode::kShared : CacheMode::kPerProbe;
  const EstimateReport r = estimate_opt(inst, params, o.seed, mode);
  if (o.header) out << EstimateReport::csv_header() << '\n';
  out << r.csv_row() << '\n';
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchGrid grid = BenchGrid::named(o.grid);
  grid.overrides = overrides_of(o);
  const unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  const BenchOutcome outcome = run_bench(grid, threads);
  std::ofstream file(o.out_path);
  if (!file) throw Invalid("cannot write " + o.out_path);
  write_bench_csv(file, outcome.records);
  out << "wrote " << o.out_path << " rows=" << outcome.records.size() << '\n';
  return kExitOk;
}

void add_instance_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--instance", o.instance_path, "Instance file")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local computation algorithms for set cover"};
  app.name("lcasc");
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Master seed of the random tape (LCASC_SEED overrides)");
  app.add_option("--K", o.K, "Sample-size constant K (default 8)");
  app.add_option("--delta-boost", o.delta_boost, "Boost exponent delta (default 2)");
  app.add_option("--sample-scale", o.sample_scale, "Replaces L^3 in sample sizes (default L^3)");
  app.add_flag("--no-scale-by-four", o.no_scale_by_four, "Skip the factor-4 weight scaling");
  app.add_option("--cache", o.cache, "Memo scope for repeated probes")
      ->check(CLI::IsMember({"shared", "per-probe"}));

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", o.family)->check(CLI::IsMember({"star", "uniform", "planted"}));
  gen->add_option("--delta", o.delta, "Set size (star, planted)");
  gen->add_option("--f", o.f, "Element frequency (uniform, planted)");
  gen->add_option("--n", o.n, "Elements (uniform)");
  gen->add_option("--m", o.m, "Sets (uniform)");
  gen->add_option("--opt", o.opt, "Planted cover size (planted)");
  gen->add_option("--out", o.out_path)->required();

  auto* solve = app.add_subcommand("solve", "Run a global algorithm");
  add_instance_option(solve, o);
  solve->add_option("--alg", o.algorithm)
      ->required()
      ->check(CLI::IsMember({"greedy", "exact", "alg1", "alg2", "alg6"}));
  solve->add_option("--policy", o.policy, "alg2 slack policy")
      ->check(CLI::IsMember({"identity", "random"}));
  solve->add_option("--ell", o.ell, "alg2 lower threshold");
  solve->add_option("--r", o.r, "alg2 upper threshold");
  solve->add_option("--estimator", o.estimator, "alg6 degree estimator")
      ->check(CLI::IsMember({"main", "exact", "fail"}));

  auto* probe = app.add_subcommand("probe", "Answer one LCA probe");
  add_instance_option(probe, o);
  probe->add_option("--alg", o.algorithm)
      ->required()
      ->check(CLI::IsMember({"warmup", "main", "integral", "warmup-integral"}));
  probe->add_option("--kind", o.kind)->check(CLI::IsMember({"set", "element"}));
  probe->add_option("--id", o.id)->required();

  auto* estimate = app.add_subcommand("estimate", "Estimate the optimum cover size");
  add_instance_option(estimate, o);
  estimate->add_flag("--header", o.header, "Print the CSV header first");

  auto* bench = app.add_subcommand("bench", "Sweep a grid and write CSV");
  bench->add_option("--grid", o.grid)->check(CLI::IsMember({"default", "smoke"}));
  bench->add_option("--out", o.out_path)->required();
  bench->add_option("--threads", o.threads, "Worker threads (default: hardware)");

  for (auto* sub : {gen, solve, probe, estimate, bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (const char* env = std::getenv("LCASC_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "LCASC_SEED is not an unsigned integer: " << env << '\n';
      return kExitUsage;
    }
  }
  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
    if (estimate->parsed()) return cmd_estimate(o, out);
    return cmd_bench(o, out);
  } catch (const Invalid& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InfeasibleParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace lcasc
