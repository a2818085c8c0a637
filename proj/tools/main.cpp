#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "dwellroute/dwell_opt.hpp"
#include "dwellroute/errors.hpp"
#include "dwellroute/instance.hpp"
#include "dwellroute/multi_vehicle.hpp"
#include "dwellroute/record.hpp"
#include "dwellroute/single_vehicle.hpp"
#include "dwellroute/tsp.hpp"

namespace fs = std::filesystem;
using namespace dwellroute;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kInput = 3, kSolver = 4 };

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFlags {
  std::string alpha_mode = "per-tsp";
  double alpha = 1.0;
  double tau = 1.0;
  std::string metric;  // empty: keep what the file says
  std::size_t vehicles = 0;
};

struct SearchFlags {
  std::string strategy = "combination";
  std::string neighborhood = "move-swap";
  int top_k = 2;
  std::size_t restarts = 3;
  std::uint64_t seed = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFailure("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputFailure("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path, const ModelFlags& model) {
  try {
    TsplibOptions opt;
    if (!model.metric.empty()) opt.metric = metric_from_string(model.metric);
    Instance inst = read_instance_file(path, opt);
    if (!model.metric.empty()) inst = inst.with_metric(opt.metric);
    if (model.vehicles > 0 && model.vehicles != inst.num_depots()) {
      if (inst.num_depots() != 1) {
        throw UsageFailure("--vehicles " + std::to_string(model.vehicles) + " conflicts with the " +
                           std::to_string(inst.num_depots()) + " depots in '" + path + "'");
      }
      inst = with_vehicle_count(inst, model.vehicles);
    }
    return inst;
  } catch (const UsageFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

struct Alpha {
  AlphaMode mode;
  double input;
  double value;
  double tsp_star;
};

Alpha resolve_alpha(const Instance& inst, const ModelFlags& model) {
  Alpha a{alpha_mode_from_string(model.alpha_mode), model.alpha, model.alpha, 0.0};
  if (!(model.alpha > 0.0)) throw UsageFailure("--alpha must be positive");
  if (!(model.tau > 0.0)) throw UsageFailure("--tau must be positive");
  if (a.mode == AlphaMode::kPerTsp) {
    a.tsp_star = single_vehicle_tsp_cost(inst);
    if (!(a.tsp_star > 0.0)) throw SolverFailure("single-vehicle tour cost is zero; use --alpha-mode absolute");
    a.value = model.alpha / a.tsp_star;
  }
  return a;
}

InfoParams make_params(const Instance& inst, const Alpha& a, double tau) {
  InfoParams p;
  p.alpha = a.value;
  p.tau.assign(inst.num_targets(), tau);
  return p;
}

SearchConfig make_search(const SearchFlags& s) {
  SearchConfig cfg;
  try {
    cfg.maximal_strategy = strategy_from_string(s.strategy);
    cfg.neighborhood = neighborhood_from_string(s.neighborhood);
  } catch (const Error& e) {
    throw UsageFailure(e.what());
  }
  cfg.top_k = s.top_k;
  cfg.restarts = s.restarts;
  cfg.rng_seed = s.seed;
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageFailure(e.what());
  }
  return cfg;
}

void stamp(RunRecord& rec, const Alpha& a) {
  rec.alpha_mode = a.mode;
  rec.alpha_input = a.input;
  rec.tsp_star = a.tsp_star;
}

void add_model_flags(CLI::App* app, ModelFlags& m) {
  app->add_option("--alpha-mode", m.alpha_mode, "per-tsp: alpha = value / TSP*; absolute: alpha = value")
      ->check(CLI::IsMember({"per-tsp", "absolute"}));
  app->add_option("--alpha", m.alpha, "alpha value or multiplier of 1/TSP*");
  app->add_option("--tau", m.tau, "information time constant shared by every target");
  app->add_option("--metric", m.metric, "exact or rounded edge costs")
      ->check(CLI::IsMember({"exact", "rounded"}));
  app->add_option("--vehicles", m.vehicles, "replicate a single depot this many times");
}

void add_search_flags(CLI::App* app, SearchFlags& s) {
  app->add_option("--strategy", s.strategy)
      ->check(CLI::IsMember(
          {"min-objective", "max-objective", "most-targets", "longest-tour", "combination"}));
  app->add_option("--neighborhood", s.neighborhood)->check(CLI::IsMember({"move", "move-swap"}));
  app->add_option("--top-k", s.top_k)->check(CLI::Range(1, 2));
  app->add_option("--restarts", s.restarts)->check(CLI::PositiveNumber);
  app->add_option("--seed", s.seed);
}

double quantile_median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

struct Stats {
  double min = 0, median = 0, mean = 0, max = 0;
};

Stats summarize(const std::vector<double>& v) {
  Stats s;
  if (v.empty()) return s;
  s.min = *std::min_element(v.begin(), v.end());
  s.max = *std::max_element(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  s.median = quantile_median(v);
  return s;
}

// ---------------------------------------------------------------- solve-single

struct SingleArgs {
  std::string instance;
  ModelFlags model;
  std::string out;
  std::string svg;
};

int cmd_solve_single(const SingleArgs& args) {
  const Instance inst = load_instance(args.instance, args.model);
  const Alpha a = resolve_alpha(inst, args.model);
  const InfoParams params = make_params(inst, a, args.model.tau);

  const auto t0 = std::chrono::steady_clock::now();
  SingleSolution sol;
  try {
    sol = solve_single(inst, 0, params);
  } catch (const Error& e) {
    throw SolverFailure(e.what());
  }
  const double wall = seconds_since(t0);

  RunRecord rec = make_record(inst, sol, params);
  stamp(rec, a);
  rec.wall_s = wall;

  const Stats d = summarize(sol.dwell.dwells);
  std::printf("%-16s %11s %5s %10s %8s %8s %8s %8s %10s %8s\n", "instance", "alpha", "tau",
              "tsp_cost", "d_min", "d_med", "d_mean", "d_max", "revisit", "time_s");
  std::printf("%-16s %11.3e %5.2f %10.2f %8.3f %8.3f %8.3f %8.3f %10.2f %8.3f\n",
              inst.name().c_str(), a.value, args.model.tau, sol.tour.cost, d.min, d.median, d.mean,
              d.max, sol.revisit_time, wall);

  if (!args.out.empty()) write_file(args.out, record_to_json(rec));
  if (!args.svg.empty()) write_file(args.svg, render_svg(rec));
  return kOk;
}

// ----------------------------------------------------------------- solve-multi

struct MultiArgs {
  std::string instance;
  ModelFlags model;
  SearchFlags search;
  std::string out;
  std::string svg;
};

RunRecord run_multi(const Instance& inst, const Alpha& a, double tau, const SearchConfig& cfg) {
  const InfoParams params = make_params(inst, a, tau);
  const auto t0 = std::chrono::steady_clock::now();
  Solution sol;
  try {
    sol = solve_multi(inst, params, cfg);
  } catch (const Error& e) {
    throw SolverFailure(e.what());
  }
  RunRecord rec = make_record(inst, sol);
  stamp(rec, a);
  rec.wall_s = seconds_since(t0);
  return rec;
}

int cmd_solve_multi(const MultiArgs& args) {
  const Instance inst = load_instance(args.instance, args.model);
  const SearchConfig cfg = make_search(args.search);
  const Alpha a = resolve_alpha(inst, args.model);
  const RunRecord rec = run_multi(inst, a, args.model.tau, cfg);

  std::printf("%s: m=%zu alpha=%.6e tau=%g initial=%.10g final=%.10g improvement=%.4f%% time=%.3fs\n",
              rec.instance_name.c_str(), rec.m, rec.alpha, rec.tau, rec.initial_obj,
              rec.final_obj, rec.pct_improve, rec.wall_s);
  for (const auto& r : rec.routes) {
    std::printf("  vehicle %zu: %zu targets, tour %.4f, objective %.10g\n", r.vehicle,
                r.order.size(), r.tour_cost, r.objective);
  }
  if (!args.out.empty()) write_file(args.out, record_to_json(rec));
  if (!args.svg.empty()) write_file(args.svg, render_svg(rec));
  return kOk;
}

// ----------------------------------------------------------------------- bench

struct BenchConfig {
  std::string name;
  Neighborhood neighborhood;
  int top_k;
};

const std::vector<BenchConfig>& bench_configs() {
  static const std::vector<BenchConfig> configs = {
      {"move-top1", Neighborhood::kMoveOnly, 1},
      {"move-top2", Neighborhood::kMoveOnly, 2},
      {"move-swap-top1", Neighborhood::kMoveAndSwap, 1},
      {"move-swap-top2", Neighborhood::kMoveAndSwap, 2},
  };
  return configs;
}

struct BenchArgs {
  std::string dir;
  ModelFlags model;
  SearchFlags search;
  std::vector<std::string> configs;
  std::string csv;
  std::string records_dir;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<BenchConfig> chosen;
  for (const auto& c : bench_configs()) {
    if (args.configs.empty() ||
        std::find(args.configs.begin(), args.configs.end(), c.name) != args.configs.end()) {
      chosen.push_back(c);
    }
  }
  for (const auto& name : args.configs) {
    const bool known = std::any_of(bench_configs().begin(), bench_configs().end(),
                                   [&](const BenchConfig& c) { return c.name == name; });
    if (!known) throw UsageFailure("unknown config '" + name + "'");
  }

  std::error_code ec;
  if (!fs::is_directory(args.dir, ec)) throw InputFailure("not a directory: '" + args.dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputFailure("no instance files in '" + args.dir + "'");

  struct Row {
    std::string instance;
    std::size_t config;
    RunRecord rec;
  };
  std::vector<Row> rows;
  std::size_t loaded = 0;
  for (const auto& path : files) {
    std::optional<Instance> inst;
    try {
      inst = load_instance(path.string(), args.model);
    } catch (const std::exception& e) {
      std::cerr << "skipping " << path.string() << ": " << e.what() << '\n';
      continue;
    }
    ++loaded;
    Alpha a{};
    try {
      a = resolve_alpha(*inst, args.model);
    } catch (const SolverFailure& e) {
      std::cerr << "skipping " << path.string() << ": " << e.what() << '\n';
      continue;
    }
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      SearchFlags s = args.search;
      s.top_k = chosen[c].top_k;
      SearchConfig cfg = make_search(s);
      cfg.neighborhood = chosen[c].neighborhood;
      try {
        rows.push_back({inst->name(), c, run_multi(*inst, a, args.model.tau, cfg)});
      } catch (const SolverFailure& e) {
        std::cerr << "solver failed on " << path.string() << " (" << chosen[c].name
                  << "): " << e.what() << '\n';
      }
    }
  }
  if (loaded == 0) throw InputFailure("no readable instances in '" + args.dir + "'");
  if (rows.empty()) throw SolverFailure("every run failed");

  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.instance, x.config) < std::tie(y.instance, y.config);
  });

  if (!args.csv.empty()) {
    std::string text(kCsvHeader);
    text += '\n';
    for (const auto& r : rows) text += record_to_csv_row(r.rec) + '\n';
    write_file(args.csv, text);
  }
  if (!args.records_dir.empty()) {
    fs::create_directories(args.records_dir, ec);
    for (const auto& r : rows) {
      const auto file = fs::path(args.records_dir) / (r.instance + "__" + chosen[r.config].name + ".json");
      write_file(file.string(), record_to_json(r.rec));
    }
  }

  std::printf("%-16s %-20s %10s %10s %10s %10s\n", "config", "measure", "min", "median", "mean",
              "max");
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    std::vector<double> pct, wall;
    for (const auto& r : rows) {
      if (r.config != c) continue;
      pct.push_back(r.rec.pct_improve);
      wall.push_back(r.rec.wall_s);
    }
    const Stats p = summarize(pct);
    const Stats w = summarize(wall);
    std::printf("%-16s %-20s %10.3g %10.3g %10.3g %10.3g\n", chosen[c].name.c_str(),
                "improvement (%)", p.min, p.median, p.mean, p.max);
    std::printf("%-16s %-20s %10.3g %10.3g %10.3g %10.3g\n", chosen[c].name.c_str(),
                "time (s)", w.min, w.median, w.mean, w.max);
  }
  return kOk;
}

// ---------------------------------------------------------------------- oracle

struct OracleArgs {
  std::string instance;
  ModelFlags model;
  SearchFlags search;
  std::size_t random = 0;
  std::size_t n = 8;
  std::size_t m = 2;
};

int oracle_multi(const Instance& inst, const ModelFlags& model, const SearchConfig& cfg) {
  const Alpha a = resolve_alpha(inst, model);
  const InfoParams params = make_params(inst, a, model.tau);
  Solution exact;
  try {
    exact = brute_force_multi(inst, params);
  } catch (const CapacityError& e) {
    throw InputFailure(std::string("oracle cap exceeded: ") + e.what());
  }
  Solution heur;
  try {
    heur = solve_multi(inst, params, cfg);
  } catch (const Error& e) {
    throw SolverFailure(e.what());
  }
  std::printf("%-28s %16.10g %16.10g %10.6f\n", inst.name().c_str(), heur.total, exact.total,
              heur.total / exact.total);
  return kOk;
}

int oracle_single(const Instance& inst, const ModelFlags& model) {
  const Alpha a = resolve_alpha(inst, model);
  const InfoParams params = make_params(inst, a, model.tau);
  if (inst.num_targets() > kHeldKarpCap) {
    throw InputFailure("oracle cap exceeded: held_karp handles at most " +
                       std::to_string(kHeldKarpCap) + " targets");
  }
  std::vector<VertexId> all(inst.num_targets());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  try {
    const Tour exact = held_karp(inst.depot_vertex(0), all, inst);
    const SingleSolution sol = solve_single(inst, 0, params);
    const double scalar = optimize_dwell_symmetric(all.size(), model.tau, a.value);
    double worst = 0.0;
    for (double d : sol.dwell.dwells) worst = std::max(worst, std::abs(d - scalar));
    std::printf("tour: solve_single %.10g held_karp %.10g ratio %.10f\n", sol.tour.cost,
                exact.cost, sol.tour.cost / exact.cost);
    std::printf("dwell: multivariate vs scalar max |diff| %.3e (scalar optimum %.10g)\n", worst,
                scalar);
    std::printf("kkt residual %.3e\n", sol.dwell.first_order_residual);
  } catch (const Error& e) {
    throw SolverFailure(e.what());
  }
  return kOk;
}

int cmd_oracle(const OracleArgs& args) {
  const SearchConfig cfg = make_search(args.search);
  if (args.random > 0) {
    if (args.n > kBruteForceMaxTargets || args.m > kBruteForceMaxVehicles) {
      throw InputFailure("oracle cap exceeded: at most " + std::to_string(kBruteForceMaxTargets) +
                         " targets and " + std::to_string(kBruteForceMaxVehicles) + " vehicles");
    }
    std::printf("%-28s %16s %16s %10s\n", "instance", "heuristic", "oracle", "ratio");
    for (std::size_t k = 0; k < args.random; ++k) {
      const Instance inst =
          generate_random_instance(args.n, args.m, Distribution::kUniform, args.search.seed + k);
      SearchConfig c = cfg;
      c.rng_seed = args.search.seed + k;
      oracle_multi(inst, args.model, c);
    }
    return kOk;
  }
  if (args.instance.empty()) throw UsageFailure("oracle needs --instance or --random");
  const Instance inst = load_instance(args.instance, args.model);
  if (inst.num_depots() == 1) return oracle_single(inst, args.model);
  std::printf("%-28s %16s %16s %10s\n", "instance", "heuristic", "oracle", "ratio");
  return oracle_multi(inst, args.model, cfg);
}

// ------------------------------------------------------------------------ plot

int cmd_plot(const std::string& record, const std::string& svg) {
  RunRecord rec;
  try {
    rec = record_from_json(read_file(record));
  } catch (const Error& e) {
    throw InputFailure(record + ": " + e.what());
  }
  write_file(svg, render_svg(rec));
  return kOk;
}

// -------------------------------------------------------------------- generate

struct GenerateArgs {
  std::size_t count = 1;
  std::size_t n = 40;
  std::size_t m = 3;
  std::string dist = "clustered";
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

int cmd_generate(const GenerateArgs& args) {
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  const Distribution dist = distribution_from_string(args.dist);
  for (std::size_t k = 0; k < args.count; ++k) {
    const Instance inst = generate_random_instance(args.n, args.m, dist, args.seed + k);
    write_file((fs::path(args.out_dir) / (inst.name() + ".json")).string(),
               save_json_instance(inst));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicle routing with dwell-time information gain"};
  app.require_subcommand(1);

  SingleArgs single;
  auto* s1 = app.add_subcommand("solve-single", "one vehicle visiting every target");
  s1->add_option("--instance", single.instance)->required();
  add_model_flags(s1, single.model);
  s1->add_option("--out", single.out, "RunRecord JSON path");
  s1->add_option("--svg", single.svg, "route drawing path");

  MultiArgs multi;
  auto* s2 = app.add_subcommand("solve-multi", "several vehicles, local search heuristic");
  s2->add_option("--instance", multi.instance)->required();
  add_model_flags(s2, multi.model);
  add_search_flags(s2, multi.search);
  s2->add_option("--out", multi.out, "RunRecord JSON path");
  s2->add_option("--svg", multi.svg, "route drawing path");

  BenchArgs bench;
  auto* s3 = app.add_subcommand("bench", "run every instance in a directory under each config");
  s3->add_option("--dir", bench.dir)->required();
  add_model_flags(s3, bench.model);
  add_search_flags(s3, bench.search);
  s3->add_option("--configs", bench.configs, "subset of move-top1,move-top2,move-swap-top1,move-swap-top2")
      ->delimiter(',');
  s3->add_option("--csv", bench.csv, "per-run CSV path");
  s3->add_option("--records-dir", bench.records_dir, "directory for per-run RunRecord JSON");

  OracleArgs oracle;
  auto* s4 = app.add_subcommand("oracle", "compare heuristics against exact solvers");
  s4->add_option("--instance", oracle.instance);
  add_model_flags(s4, oracle.model);
  add_search_flags(s4, oracle.search);
  s4->add_option("--random", oracle.random, "number of generated instances (seed sweep)");
  s4->add_option("--n", oracle.n, "targets per generated instance");
  s4->add_option("--m", oracle.m, "vehicles per generated instance");

  std::string plot_record, plot_svg;
  auto* s5 = app.add_subcommand("plot", "draw a RunRecord as SVG");
  s5->add_option("--record", plot_record)->required();
  s5->add_option("--svg", plot_svg)->required();

  GenerateArgs gen;
  auto* s6 = app.add_subcommand("generate", "write random instances as JSON");
  s6->add_option("--count", gen.count)->check(CLI::PositiveNumber);
  s6->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  s6->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  s6->add_option("--dist", gen.dist)->check(CLI::IsMember({"uniform", "clustered"}));
  s6->add_option("--seed", gen.seed);
  s6->add_option("--out-dir", gen.out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*s1) return cmd_solve_single(single);
    if (*s2) return cmd_solve_multi(multi);
    if (*s3) return cmd_bench(bench);
    if (*s4) return cmd_oracle(oracle);
    if (*s5) return cmd_plot(plot_record, plot_svg);
    if (*s6) return cmd_generate(gen);
  } catch (const UsageFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const SolverFailure& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  }
  return kUsage;
}
