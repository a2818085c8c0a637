// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--rd100 path]

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dwellroute/assignment.hpp"
#include "dwellroute/dwell_opt.hpp"
#include "dwellroute/infogain.hpp"
#include "dwellroute/instance.hpp"
#include "dwellroute/multi_vehicle.hpp"
#include "dwellroute/record.hpp"
#include "dwellroute/single_vehicle.hpp"
#include "dwellroute/tsp.hpp"

using namespace dwellroute;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(const char* fmt, auto... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double median(const std::vector<double>& v) { return quantile(v, 0.5); }

std::vector<VertexId> all_targets(const Instance& inst) {
  std::vector<VertexId> t(inst.num_targets());
  std::iota(t.begin(), t.end(), 0);
  return t;
}

double closed_tour(const Instance& inst, VertexId depot, const std::vector<VertexId>& order) {
  double c = 0.0;
  VertexId at = depot;
  for (VertexId t : order) {
    c += euclidean(inst.location(at), inst.location(t));
    at = t;
  }
  return c + euclidean(inst.location(at), inst.location(depot));
}

double enumerate_tsp(const Instance& inst, VertexId depot, std::vector<VertexId> targets) {
  std::sort(targets.begin(), targets.end());
  double best = INFINITY;
  do {
    best = std::min(best, closed_tour(inst, depot, targets));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

InfoParams per_tsp(const Instance& inst, double k, double tau) {
  InfoParams p;
  p.alpha = k / single_vehicle_tsp_cost(inst);
  p.tau.assign(inst.num_targets(), tau);
  return p;
}

// log 2 - I(d) in extended precision, written in q = 1 - P.
long double info_gap(long double d, long double tau) {
  const long double s = std::sqrt(d / tau);
  const long double q = 0.5L * std::exp(-s);
  return -(1.0L - q) * std::log1p(-q) + q * (s + std::log(2.0L));
}

bool monotone(const std::vector<double>& log) {
  for (std::size_t k = 1; k < log.size(); ++k) {
    if (!(log[k] > log[k - 1])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome criterion_1(const std::string&) {
  Outcome o;
  const double ln2 = std::numbers::ln2;
  std::mt19937_64 rng(101);
  // 1 - P stays representable below d = 10^2.95 tau, so strict bounds hold there
  std::uniform_real_distribution<double> logd(-4.0, 2.95), logt(-1.0, 1.0);
  std::size_t bad = 0;
  for (int k = 0; k < 10000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    double d1 = tau * std::pow(10.0, logd(rng)), d2 = tau * std::pow(10.0, logd(rng));
    if (d1 > d2) std::swap(d1, d2);
    const double p1 = classification_prob(d1, tau), p2 = classification_prob(d2, tau);
    const double i1 = mutual_info(d1, tau), i2 = mutual_info(d2, tau);
    const double g1 = mutual_info_deriv(d1, tau), g2 = mutual_info_deriv(d2, tau);
    const bool ok = p1 >= 0.5 && p1 < 1.0 && p1 <= p2 && i1 >= 0.0 && i1 < ln2 && i1 <= i2 &&
                    g1 >= 0.0 && g2 <= g1 && mutual_info_second_deriv(d1, tau) <= 0.0;
    bad += !ok;
  }
  if (bad) fail(o, std::to_string(bad) + " of 10000 samples broke bounds/monotonicity/concavity");

  // limits
  for (double tau : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    if (mutual_info(0.0, tau) != 0.0 || classification_prob(0.0, tau) != 0.5)
      fail(o, "I(0) or P(0) off");
    if (std::abs(mutual_info_deriv(0.0, tau) - 1.0 / (2.0 * tau)) > 1e-15)
      fail(o, "I'(0+) != 1/(2 tau)");
    if (std::abs(mutual_info(1e6 * tau, tau) - ln2) > 1e-12) fail(o, "I(inf) != log 2");
  }

  std::uniform_real_distribution<double> logd_fd(-3.0, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    const long double d = tau * std::pow(10.0, logd_fd(rng));
    const long double h = 1e-5L * d;
    const auto fd = static_cast<double>(-(info_gap(d + h, tau) - info_gap(d - h, tau)) / (2 * h));
    const double an = mutual_info_deriv(static_cast<double>(d), tau);
    worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
  }
  note("derivative vs central differences: worst rel. error %.2e over 1000 samples", worst);
  if (worst >= 1e-6) fail(o, "derivative mismatch");
  if (o.pass) o.detail = "10000 property samples, 1000 derivative samples";
  return o;
}

Outcome criterion_2(const std::string&) {
  Outcome o;
  double dwell_err = 0.0, obj_err = 0.0, kkt = 0.0;
  std::size_t cells = 0;
  for (std::size_t n : {1u, 5u, 50u, 99u}) {
    for (double tau : {0.5, 1.0, 2.0}) {
      for (double alpha : {1e-4, 1e-3, 1e-2}) {
        const std::vector<double> taus(n, tau);
        const auto r = optimize_dwell(0.0, taus, alpha);
        const double star = optimize_dwell_symmetric(n, tau, alpha);
        const double nd = static_cast<double>(n);
        const double obj_star = std::exp(-alpha * nd * star) * nd * mutual_info(star, tau);
        for (double d : r.dwells) dwell_err = std::max(dwell_err, std::abs(d - star));
        obj_err = std::max(obj_err, std::abs(r.objective - obj_star) / obj_star);
        kkt = std::max(kkt, kkt_residual(r.dwells, taus, alpha));
        if (!r.converged) fail(o, "unconverged cell");
        ++cells;
      }
    }
  }
  note("%zu cells: max |d - d*| %.2e, max rel. objective error %.2e, max KKT residual %.2e",
       cells, dwell_err, obj_err, kkt);
  if (dwell_err >= 1e-6) fail(o, "dwell differs from scalar oracle");
  if (obj_err >= 1e-8) fail(o, "objective differs from scalar oracle");
  if (kkt >= 1e-7) fail(o, "KKT residual too large");
  if (o.pass) o.detail = std::to_string(cells) + " grid cells";
  return o;
}

Outcome criterion_3(const std::string& rd100) {
  Outcome o;
  constexpr double kAlphas[3] = {6.37e-5, 1.27e-4, 2.55e-4};
  constexpr double kTaus[3] = {0.5, 1.0, 2.0};
  constexpr double kMeanDwell[3][3] = {{11.37, 17.01, 24.55}, {8.78, 12.72, 17.71}, {6.48, 9.04, 12.1}};
  constexpr std::size_t kTargets = 99;
  constexpr double kTourCost = 7910.0;

  const bool have_file = !rd100.empty() && std::filesystem::exists(rd100);
  std::optional<Instance> inst;
  if (have_file) {
    TsplibOptions opt;
    opt.metric = MetricMode::kRoundedEuclidean;
    inst = read_instance_file(rd100, opt);
    const double tour = single_vehicle_tsp_cost(*inst);
    const double rel = std::abs(tour - kTourCost) / kTourCost;
    note("rounded tour cost %.1f vs 7910 (rel. %.4f)", tour, rel);
    if (inst->num_targets() != kTargets) fail(o, "rd100 does not have 99 targets");
    if (rel > 0.02) fail(o, "tour cost outside 2% of 7910");
  }

  double mean[3][3];
  double worst_rel = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int t = 0; t < 3; ++t) {
      std::vector<double> dwell;
      if (inst) {
        InfoParams p;
        p.alpha = kAlphas[a];
        p.tau.assign(inst->num_targets(), kTaus[t]);
        dwell = solve_single(*inst, 0, p).dwell.dwells;
      } else {
        // the maximising dwells do not depend on the tour
        const std::vector<double> taus(kTargets, kTaus[t]);
        dwell = optimize_dwell(0.0, taus, kAlphas[a]).dwells;
      }
      mean[a][t] = std::accumulate(dwell.begin(), dwell.end(), 0.0) / static_cast<double>(dwell.size());
      const double rel = std::abs(mean[a][t] - kMeanDwell[a][t]) / kMeanDwell[a][t];
      worst_rel = std::max(worst_rel, rel);
      note("alpha %.2e tau %.1f: mean dwell %.3f vs %.2f (%+.1f%%)", kAlphas[a], kTaus[t],
           mean[a][t], kMeanDwell[a][t], 100.0 * (mean[a][t] / kMeanDwell[a][t] - 1.0));
    }
  }
  if (worst_rel > 0.15) fail(o, "mean dwell outside 15% band");
  for (int a = 0; a < 3; ++a) {
    for (int t = 0; t + 1 < 3; ++t) {
      if (!(mean[a][t + 1] > mean[a][t])) fail(o, "dwell does not increase with tau");
      if (!(mean[t + 1][a] < mean[t][a])) fail(o, "dwell does not decrease with alpha");
    }
  }
  if (!have_file) {
    fail(o, "rd100 tour-cost check not run: file not found at '" + rd100 +
                "' (dwell band " + (worst_rel <= 0.15 ? "ok" : "failed") + ")");
  }
  if (o.pass) o.detail = "worst dwell deviation " + sci(100 * worst_rel) + "%";
  return o;
}

Outcome criterion_4(const std::string&) {
  Outcome o;
  std::size_t hk_checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto inst = generate_random_instance(n, 1, Distribution::kUniform, seed);
      const auto depot = inst.depot_vertex(0);
      const double hk = held_karp(depot, all_targets(inst), inst).cost;
      const double brute = enumerate_tsp(inst, depot, all_targets(inst));
      if (std::abs(hk - brute) > 1e-9 * brute) fail(o, "held_karp differs from enumeration");
      ++hk_checked;
    }
  }
  double worst = 1.0;
  std::size_t heur_checked = 0;
  for (std::size_t n = 2; n <= 13; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto inst = generate_random_instance(n, 1, Distribution::kUniform, seed);
      const auto depot = inst.depot_vertex(0);
      const double hk = held_karp(depot, all_targets(inst), inst).cost;
      const double h = solve_tsp_heuristic(depot, all_targets(inst), inst, seed).cost;
      worst = std::max(worst, h / hk);
      ++heur_checked;
    }
  }
  note("held_karp = enumeration on %zu instances; heuristic worst ratio %.4f on %zu instances",
       hk_checked, worst, heur_checked);
  if (worst > 1.05) fail(o, "heuristic more than 5% above held_karp");
  if (o.pass) o.detail = "worst heuristic ratio " + sci(worst);
  return o;
}

Outcome criterion_5(const std::string&) {
  Outcome o;
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> tau_d(0.25, 4.0), log_a(-4.0, -2.0);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const auto inst = generate_random_instance(n, 1, seed % 2 ? Distribution::kClustered
                                                              : Distribution::kUniform, 5000 + seed);
    const double tau = tau_d(rng), alpha = std::pow(10.0, log_a(rng));
    InfoParams p;
    p.alpha = alpha;
    p.tau.assign(n, tau);
    const double d = optimize_dwell_symmetric(n, tau, alpha);
    const double nd = static_cast<double>(n);
    const double tour = enumerate_tsp(inst, inst.depot_vertex(0), all_targets(inst));
    const double oracle = std::exp(-alpha * (tour + nd * d)) * nd * mutual_info(d, tau);
    const double got = solve_single(inst, 0, p).objective;
    worst = std::max(worst, std::abs(got - oracle) / oracle);
  }
  note("50 instances, n in 2..9: worst rel. objective error %.2e", worst);
  if (worst > 1e-8) fail(o, "solve_single differs from brute force");
  if (o.pass) o.detail = "worst rel. error " + sci(worst);
  return o;
}

Outcome criterion_6(const std::string&) {
  Outcome o;
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto c = balanced_counts(n, m);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t expect = j < n % m ? (n + m - 1) / m : n / m;
        if (c[j] != expect) fail(o, "balanced counts wrong");
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 11, m = 2 + seed % 2;
    const auto inst = generate_random_instance(n, m, Distribution::kUniform, 600 + seed);
    const auto cost = assignment_costs(inst, seed);
    const auto counts = balanced_counts(n, m);
    const auto got = balanced_assignment(cost, counts);
    std::vector<std::size_t> digit(n, 0);
    double best = INFINITY;
    while (true) {
      std::vector<std::size_t> used(m, 0);
      double c = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        ++used[digit[i]];
        c += cost[i][digit[i]];
      }
      if (used == counts) best = std::min(best, c);
      std::size_t k = 0;
      while (k < n && ++digit[k] == m) digit[k++] = 0;
      if (k == n) break;
    }
    if (std::abs(got.cost - best) > 1e-9 * std::max(1.0, best)) fail(o, "assignment not optimal");
  }
  if (o.pass) o.detail = "counts grid to (30, 6); 50 assignments match enumeration";
  return o;
}

Outcome criterion_7(const std::string&) {
  Outcome o;
  std::vector<double> gap, rel_gap, savings, increases;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto inst = generate_random_instance(30 + s, 3, s % 2 ? Distribution::kUniform
                                                                : Distribution::kClustered, 7000 + s);
    const auto p = per_tsp(inst, 1.0, 1.0);
    SearchConfig cfg;
    cfg.rng_seed = s;
    const auto sol = initial_assignment(inst, p, cfg);
    for (const auto& route : sol.routes) {
      for (std::size_t k = 0; k < route.tour.order.size(); ++k) {
        const VertexId t = route.tour.order[k];
        const auto est = removal_gain(inst, route, t, p);
        savings.push_back(est.savings);
        std::vector<VertexId> rest;
        for (VertexId u : route.tour.order) {
          if (u != t) rest.push_back(u);
        }
        const auto real = realize_route(inst, route.vehicle_id, rest, p, cfg);
        const double realized = real.objective - route.objective;
        gap.push_back(realized - est.objective_delta);
        if (real.objective > 0) rel_gap.push_back((real.objective - est.estimated_objective) / real.objective);
        for (const auto& other : sol.routes) {
          if (other.vehicle_id == route.vehicle_id) continue;
          increases.push_back(insertion_gain(inst, other, t, route.dwell[k], p).insertion_increase);
        }
      }
    }
  }
  const double min_sav = *std::min_element(savings.begin(), savings.end());
  const double min_ins = *std::min_element(increases.begin(), increases.end());
  const auto neg = std::count_if(gap.begin(), gap.end(), [](double g) { return g < 0.0; });
  note("%zu removals: realized - estimated change min %.3e median %.3e p90 %.3e max %.3e (%td negative)",
       gap.size(), quantile(gap, 0), median(gap), quantile(gap, 0.9), quantile(gap, 1), neg);
  note("relative to realized objective: median %.3e p90 %.3e p99 %.3e max %.3e", median(rel_gap),
       quantile(rel_gap, 0.9), quantile(rel_gap, 0.99), quantile(rel_gap, 1));
  note("min savings %.3e over %zu; min insertion increase %.3e over %zu", min_sav, savings.size(),
       min_ins, increases.size());
  if (min_sav < -1e-9) fail(o, "negative savings");
  if (min_ins < -1e-9) fail(o, "negative insertion increase");
  if (o.pass) o.detail = std::to_string(gap.size()) + " removals, no negative proxy costs";
  return o;
}

Outcome criterion_8(const std::string&) {
  Outcome o;
  std::size_t good = 0, exact = 0;
  double worst = 1.0;
  for (std::uint64_t s = 1000; s < 1050; ++s) {
    const auto inst = generate_random_instance(8, 2, Distribution::kUniform, s);
    const auto p = per_tsp(inst, 1.0, 1.0);
    SearchConfig cfg;  // Combination, MoveAndSwap, top 2, 3 restarts
    cfg.rng_seed = s;
    const auto h = solve_multi(inst, p, cfg);
    const auto best = brute_force_multi(inst, p);
    const double ratio = h.total / best.total;
    worst = std::min(worst, ratio);
    good += ratio >= 0.95;
    exact += ratio >= 1.0 - 1e-9;
    if (ratio > 1.0 + 1e-9) fail(o, "heuristic beats the exhaustive oracle");
    if (!is_partition(inst, h)) fail(o, "invalid partition");
    if (!monotone(h.provenance.incumbent_log)) fail(o, "incumbent log not increasing");
  }
  note("%zu/50 at >= 95%% of oracle, %zu/50 optimal, worst ratio %.4f", good, exact, worst);
  if (good < 45) fail(o, "fewer than 90% of instances within 95% of oracle");
  if (o.pass) o.detail = std::to_string(good) + "/50 within 95% of oracle";
  return o;
}

Outcome criterion_9(const std::string&) {
  Outcome o;
  constexpr std::size_t kSuite = 43;
  const MaximalStrategy strategies[] = {MaximalStrategy::kMinObjective, MaximalStrategy::kMaxObjective,
                                        MaximalStrategy::kMostTargets, MaximalStrategy::kLongestTour,
                                        MaximalStrategy::kCombination};
  struct Config {
    const char* name;
    Neighborhood nb;
    int top_k;
  };
  const Config configs[] = {{"move/top1", Neighborhood::kMoveOnly, 1},
                            {"move/top2", Neighborhood::kMoveOnly, 2},
                            {"move-swap/top1", Neighborhood::kMoveAndSwap, 1},
                            {"move-swap/top2", Neighborhood::kMoveAndSwap, 2}};
  std::vector<std::vector<double>> by_strategy(5), by_config(4), time_config(4);
  std::size_t swap_wins = 0;

  for (std::size_t i = 0; i < kSuite; ++i) {
    const std::size_t n = 10 + i * 90 / (kSuite - 1), m = 2 + i % 4;
    const auto inst = generate_random_instance(
        n, m, i % 2 ? Distribution::kUniform : Distribution::kClustered, 4300 + i);
    const auto p = per_tsp(inst, 1.0, 1.0);

    // maximal-vehicle rules: 1-pt move local search from the shared initial solution
    for (std::size_t k = 0; k < 5; ++k) {
      SearchConfig cfg;
      cfg.neighborhood = Neighborhood::kMoveOnly;
      cfg.top_k = 1;
      cfg.maximal_strategy = strategies[k];
      cfg.rng_seed = i;
      const auto start = initial_assignment(inst, p, cfg);
      const auto done = local_search(inst, start, cfg);
      if (done.total < start.total || !is_partition(inst, done) ||
          !monotone(done.provenance.incumbent_log))
        fail(o, "local search broke an invariant");
      by_strategy[k].push_back(percent_improvement(start.total, done.total));
    }

    // neighbourhood settings: full heuristic, best of 3 restarts, shared seed
    std::vector<double> totals;
    for (std::size_t c = 0; c < 4; ++c) {
      SearchConfig cfg;
      cfg.neighborhood = configs[c].nb;
      cfg.top_k = configs[c].top_k;
      cfg.rng_seed = i;
      const auto t0 = std::chrono::steady_clock::now();
      const auto sol = solve_multi(inst, p, cfg);
      time_config[c].push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      if (sol.total < sol.provenance.initial_total || !is_partition(inst, sol) ||
          !monotone(sol.provenance.incumbent_log))
        fail(o, "solve_multi broke an invariant");
      // a move-swap optimum admits no improving move
      if (cfg.neighborhood == Neighborhood::kMoveAndSwap && one_point_move(inst, sol, cfg))
        fail(o, "move-swap result is not move-optimal");
      by_config[c].push_back(percent_improvement(sol.provenance.initial_total, sol.total));
      totals.push_back(sol.total);
    }
    if (totals[3] >= totals[0] - 1e-12 * totals[0]) {
      ++swap_wins;
    } else {
      note("instance %zu (n %zu, m %zu): move-swap/top2 %.6g below move/top1 %.6g (%.3g%% vs %.3g%%)", i, n, m,
           totals[3], totals[0], by_config[3].back(), by_config[0].back());
    }
  }

  const char* names[] = {"min-objective", "max-objective", "most-targets", "longest-tour", "combination"};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& v = by_strategy[k];
    note("%-14s improvement %%: min %.3g median %.3g mean %.3g max %.3g", names[k], quantile(v, 0),
         median(v), std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()),
         quantile(v, 1));
  }
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& v = by_config[c];
    note("%-14s improvement %%: min %.3g median %.3g mean %.3g max %.3g; time s: median %.3g max %.3g",
         configs[c].name, quantile(v, 0), median(v),
         std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()), quantile(v, 1),
         median(time_config[c]), quantile(time_config[c], 1));
  }
  const double comb = median(by_strategy[4]), longest = median(by_strategy[3]),
               most = median(by_strategy[2]);
  const bool trend = comb >= longest && longest >= most;
  note("strategy ordering combination >= longest-tour >= most-targets: %s (soft, reported only)",
       trend ? "holds" : "does not hold");
  note("move-swap/top2 >= move/top1 objective on %zu/%zu shared seeds", swap_wins, kSuite);
  const double swap_med = median(by_config[3]), move_med = median(by_config[0]);
  note("median improvement move-swap/top2 %.17g%% vs move/top1 %.17g%%", swap_med, move_med);
  // equal partitions can differ in the last bits through summation order
  if (swap_med < move_med - 1e-9 * std::abs(move_med))
    fail(o, "median improvement of move-swap/top2 below move/top1");
  if (o.pass) {
    o.detail = std::string("hard gates hold; strategy ordering ") + (trend ? "holds" : "flagged");
  }
  return o;
}

Outcome criterion_10(const std::string&) {
  Outcome o;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto inst = generate_random_instance(25 + 5 * s, 2 + s % 3, Distribution::kClustered, 1100 + s);
    const auto p = per_tsp(inst, 1.0 + static_cast<double>(s % 2), 1.0);
    SearchConfig cfg;
    cfg.rng_seed = s;
    auto a = make_record(inst, solve_multi(inst, p, cfg));
    auto b = make_record(inst, solve_multi(inst, p, cfg));
    a.wall_s = b.wall_s = 0.0;
    if (record_to_json(a) != record_to_json(b)) fail(o, "solve_multi not reproducible");
    auto sa = make_record(inst, solve_single(inst, 0, p), p);
    auto sb = make_record(inst, solve_single(inst, 0, p), p);
    if (record_to_json(sa) != record_to_json(sb)) fail(o, "solve_single not reproducible");
  }
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto inst = generate_random_instance(8 + 6 * s, 1, s % 2 ? Distribution::kUniform
                                                                   : Distribution::kClustered, 1200 + s);
    const auto p = per_tsp(inst, 1.0, 0.5 + 0.25 * static_cast<double>(s));
    SearchConfig cfg;
    cfg.rng_seed = s;
    const double multi = solve_multi(inst, p, cfg).total;
    const double single = solve_single(inst, 0, p).objective;
    worst = std::max(worst, std::abs(multi - single) / single);
  }
  note("m = 1 reduction: worst rel. difference %.2e over 10 instances", worst);
  if (worst > 1e-8) fail(o, "m = 1 differs from single-vehicle solve");
  if (o.pass) o.detail = "identical repeated runs; m = 1 reduction exact";
  return o;
}

struct Criterion {
  const char* title;
  double budget_s;
  std::function<Outcome(const std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  std::string rd100;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--rd100", rd100, "path to the rd100 TSPLIB file");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {"information-gain properties", 5, criterion_1},
      {"dwell optimizer exactness", 30, criterion_2},
      {"single-vehicle dwell band", 60, criterion_3},
      {"TSP correctness", 120, criterion_4},
      {"single-vehicle optimality", 60, criterion_5},
      {"assignment initializer", 60, criterion_6},
      {"proxy-cost fidelity", 120, criterion_7},
      {"heuristic vs oracle", 600, criterion_8},
      {"strategy trends", 1800, criterion_9},
      {"determinism and reduction", 600, criterion_10},
  };

  bool ok = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = all[i].run(rd100);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.pass && secs > all[i].budget_s) {
      out = {false, "over time budget of " + sci(all[i].budget_s) + " s"};
    }
    std::printf("criterion %zu [%s]: %s (%.2f s) %s\n", i + 1, all[i].title,
                out.pass ? "PASS" : "FAIL", secs, out.detail.c_str());
    std::fflush(stdout);
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
