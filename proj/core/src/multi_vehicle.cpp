#include "dwellroute/multi_vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unordered_map>

#include "dwellroute/assignment.hpp"
#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> taus_of(const std::vector<VertexId>& order, const InfoParams& params) {
  std::vector<double> taus;
  taus.reserve(order.size());
  for (VertexId t : order) taus.push_back(params.tau[t]);
  return taus;
}

std::size_t position_of(const VehicleRoute& route, VertexId t) {
  const auto it = std::find(route.tour.order.begin(), route.tour.order.end(), t);
  if (it == route.tour.order.end()) return route.tour.order.size();
  return static_cast<std::size_t>(it - route.tour.order.begin());
}

// Estimated route after removing the target at `pos` (tour shortened by the savings).
VehicleRoute estimated_without(const VehicleRoute& route, std::size_t pos, const ProxyEval& eval) {
  VehicleRoute out = route;
  out.tour.order.erase(out.tour.order.begin() + static_cast<std::ptrdiff_t>(pos));
  out.dwell.erase(out.dwell.begin() + static_cast<std::ptrdiff_t>(pos));
  out.tour.cost = out.tour.order.empty() ? 0.0 : std::max(0.0, route.tour.cost - eval.savings);
  out.objective = eval.estimated_objective;
  return out;
}

VehicleRoute estimated_with(const VehicleRoute& route, VertexId t, double d_t,
                            const ProxyEval& eval) {
  VehicleRoute out = route;
  const auto at = static_cast<std::ptrdiff_t>(eval.insert_position);
  out.tour.order.insert(out.tour.order.begin() + at, t);
  out.dwell.insert(out.dwell.begin() + at, d_t);
  out.tour.cost = route.tour.cost + eval.insertion_increase;
  out.objective = eval.estimated_objective;
  return out;
}

std::vector<double> dwell_by_target(const Instance& inst, const Solution& sol) {
  std::vector<double> d(inst.num_targets(), 0.0);
  for (const auto& r : sol.routes) {
    for (std::size_t k = 0; k < r.tour.order.size(); ++k) d[r.tour.order[k]] = r.dwell[k];
  }
  return d;
}

double dwell_of(const VehicleRoute& route, VertexId t) {
  const std::size_t pos = position_of(route, t);
  if (pos == route.tour.order.size()) throw ContractError("target not in route");
  return route.dwell[pos];
}

void recompute_total(Solution& sol) {
  sol.total = 0.0;
  for (const auto& r : sol.routes) sol.total += r.objective;
}

// Candidates ordered by descending estimated objective delta, ties by target id.
std::vector<std::pair<VertexId, ProxyEval>> removal_order(const Instance& inst,
                                                          const VehicleRoute& route,
                                                          const InfoParams& params,
                                                          std::optional<VertexId> skip = {}) {
  std::vector<std::pair<VertexId, ProxyEval>> out;
  for (VertexId t : route.tour.order) {
    if (skip && *skip == t) continue;
    out.emplace_back(t, removal_gain(inst, route, t, params));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.objective_delta != b.second.objective_delta) {
      return a.second.objective_delta > b.second.objective_delta;
    }
    return a.first < b.first;
  });
  return out;
}

std::vector<VertexId> targets_without(const VehicleRoute& r, VertexId out) {
  std::vector<VertexId> v;
  for (VertexId t : r.tour.order) {
    if (t != out) v.push_back(t);
  }
  return v;
}

// Re-solves vehicles a and b on their new target sets; commits only when the
// realised total beats the current one by more than eps.
std::optional<Solution> realize_pair(const Instance& inst, const Solution& sol, std::size_t a,
                                     std::vector<VertexId> targets_a, std::size_t b,
                                     std::vector<VertexId> targets_b, double carried_dwell,
                                     VertexId moved, const SearchConfig& cfg) {
  auto warm = dwell_by_target(inst, sol);
  warm[moved] = carried_dwell;
  Solution next = sol;
  next.routes[a] = realize_route(inst, a, std::move(targets_a), sol.params, cfg, warm);
  next.routes[b] = realize_route(inst, b, std::move(targets_b), sol.params, cfg, warm);
  recompute_total(next);
  if (next.total > sol.total + cfg.improve_eps) return next;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Neighborhood n) {
  return n == Neighborhood::kMoveOnly ? "move" : "move-swap";
}

std::string_view to_string(MaximalStrategy s) {
  switch (s) {
    case MaximalStrategy::kMinObjective: return "min-objective";
    case MaximalStrategy::kMaxObjective: return "max-objective";
    case MaximalStrategy::kMostTargets: return "most-targets";
    case MaximalStrategy::kLongestTour: return "longest-tour";
    case MaximalStrategy::kCombination: return "combination";
  }
  return "?";
}

Neighborhood neighborhood_from_string(std::string_view text) {
  if (text == "move") return Neighborhood::kMoveOnly;
  if (text == "move-swap") return Neighborhood::kMoveAndSwap;
  throw ContractError("unknown neighborhood '" + std::string(text) + "' (move|move-swap)");
}

MaximalStrategy strategy_from_string(std::string_view text) {
  for (auto s : {MaximalStrategy::kMinObjective, MaximalStrategy::kMaxObjective,
                 MaximalStrategy::kMostTargets, MaximalStrategy::kLongestTour,
                 MaximalStrategy::kCombination}) {
    if (to_string(s) == text) return s;
  }
  throw ContractError("unknown strategy '" + std::string(text) + "'");
}

void SearchConfig::validate() const {
  if (top_k != 1 && top_k != 2) throw ContractError("top_k must be 1 or 2");
  if (restarts < 1) throw ContractError("restarts must be >= 1");
  if (!(improve_eps >= 0.0)) throw ContractError("improve_eps must be >= 0");
  dwell.validate();
}

double route_objective(const VehicleRoute& route, const InfoParams& params) {
  const auto taus = taus_of(route.tour.order, params);
  return vehicle_objective(route.tour.cost, route.dwell, taus, params.alpha);
}

ProxyEval removal_gain(const Instance& inst, const VehicleRoute& route, VertexId t,
                       const InfoParams& params) {
  const auto& order = route.tour.order;
  const std::size_t pos = position_of(route, t);
  if (pos == order.size()) {
    throw ContractError("target " + std::to_string(t) + " is not on vehicle " +
                        std::to_string(route.vehicle_id));
  }
  const VertexId depot = route.tour.depot;
  const VertexId prev = pos == 0 ? depot : order[pos - 1];
  const VertexId next = pos + 1 == order.size() ? depot : order[pos + 1];

  ProxyEval eval;
  eval.savings = inst.cost(prev, t) + inst.cost(t, next) - inst.cost(prev, next);
  eval.insert_position = pos;

  double dwell_sum = 0.0;
  double info = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == pos) continue;
    dwell_sum += route.dwell[k];
    info += mutual_info(route.dwell[k], params.tau[order[k]]);
  }
  if (order.size() == 1) {
    eval.estimated_objective = 0.0;
  } else {
    const double cost = std::max(0.0, route.tour.cost - eval.savings);
    eval.estimated_objective = std::exp(-params.alpha * (cost + dwell_sum)) * info;
  }
  eval.objective_delta = eval.estimated_objective - route.objective;
  return eval;
}

ProxyEval removal_gain(const Instance& inst, const Solution& sol, std::size_t vehicle, VertexId t) {
  if (vehicle >= sol.routes.size()) throw std::out_of_range("vehicle index out of range");
  return removal_gain(inst, sol.routes[vehicle], t, sol.params);
}

ProxyEval insertion_gain(const Instance& inst, const VehicleRoute& route, VertexId t, double d_t,
                         const InfoParams& params) {
  const auto& order = route.tour.order;
  if (position_of(route, t) != order.size()) {
    throw ContractError("target " + std::to_string(t) + " is already on vehicle " +
                        std::to_string(route.vehicle_id));
  }
  if (t >= inst.num_targets()) throw std::out_of_range("target id out of range");
  const VertexId depot = route.tour.depot;
  ProxyEval eval;
  eval.insertion_increase = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= order.size(); ++k) {
    const VertexId u = k == 0 ? depot : order[k - 1];
    const VertexId v = k == order.size() ? depot : order[k];
    const double inc = inst.cost(u, t) + inst.cost(t, v) - inst.cost(u, v);
    if (inc < eval.insertion_increase) {
      eval.insertion_increase = inc;
      eval.insert_position = k;
    }
  }
  double dwell_sum = d_t;
  double info = mutual_info(d_t, params.tau[t]);
  for (std::size_t k = 0; k < order.size(); ++k) {
    dwell_sum += route.dwell[k];
    info += mutual_info(route.dwell[k], params.tau[order[k]]);
  }
  const double cost = route.tour.cost + eval.insertion_increase;
  eval.estimated_objective = std::exp(-params.alpha * (cost + dwell_sum)) * info;
  eval.objective_delta = eval.estimated_objective - route.objective;
  return eval;
}

ProxyEval insertion_gain(const Instance& inst, const Solution& sol, std::size_t vehicle, VertexId t,
                         double d_t) {
  if (vehicle >= sol.routes.size()) throw std::out_of_range("vehicle index out of range");
  return insertion_gain(inst, sol.routes[vehicle], t, d_t, sol.params);
}

std::vector<std::size_t> select_maximal(const Solution& sol, MaximalStrategy strategy, int top_k) {
  const std::size_t m = sol.routes.size();
  if (m == 0) return {};
  auto ranked = [&](auto better) {
    std::vector<std::size_t> idx(m);
    for (std::size_t j = 0; j < m; ++j) idx[j] = j;
    std::stable_sort(idx.begin(), idx.end(), better);
    idx.resize(std::min<std::size_t>(m, static_cast<std::size_t>(std::max(top_k, 1))));
    return idx;
  };
  const auto& r = sol.routes;
  auto by_tour = [&](std::size_t a, std::size_t b) { return r[a].tour.cost > r[b].tour.cost; };
  auto by_count = [&](std::size_t a, std::size_t b) {
    return r[a].tour.order.size() > r[b].tour.order.size();
  };
  switch (strategy) {
    case MaximalStrategy::kMinObjective:
      return ranked([&](std::size_t a, std::size_t b) { return r[a].objective < r[b].objective; });
    case MaximalStrategy::kMaxObjective:
      return ranked([&](std::size_t a, std::size_t b) { return r[a].objective > r[b].objective; });
    case MaximalStrategy::kMostTargets:
      return ranked(by_count);
    case MaximalStrategy::kLongestTour:
      return ranked(by_tour);
    case MaximalStrategy::kCombination: {
      auto out = ranked(by_tour);
      for (std::size_t j : ranked(by_count)) {
        if (std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
      }
      return out;
    }
  }
  return {};
}

VehicleRoute realize_route(const Instance& inst, std::size_t vehicle, std::vector<VertexId> targets,
                           const InfoParams& params, const SearchConfig& cfg,
                           std::span<const double> warm_dwell) {
  std::sort(targets.begin(), targets.end());
  VehicleRoute route;
  route.vehicle_id = vehicle;
  route.tour = solve_tsp(inst.depot_vertex(vehicle), targets, inst, cfg.tsp_seed);
  if (route.tour.order.empty()) return route;
  const auto taus = taus_of(route.tour.order, params);
  DwellSolverConfig dcfg = cfg.dwell;
  std::vector<double> warm;
  if (!warm_dwell.empty()) {
    dcfg.init_mode = DwellInit::kWarmStart;
    for (VertexId t : route.tour.order) warm.push_back(warm_dwell[t]);
  } else {
    dcfg.init_mode = DwellInit::kTau;
  }
  auto res = optimize_dwell(route.tour.cost, taus, params.alpha, dcfg, warm);
  route.dwell = std::move(res.dwells);
  route.objective = res.objective;
  return route;
}

bool is_partition(const Instance& inst, const Solution& sol) {
  std::vector<int> seen(inst.num_targets(), 0);
  for (const auto& r : sol.routes) {
    for (VertexId t : r.tour.order) {
      if (t >= seen.size() || seen[t]++ != 0) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

void check_solution(const Instance& inst, const Solution& sol, double rel_tol) {
  if (sol.routes.size() != inst.num_depots()) throw ContractError("one route per vehicle required");
  if (!is_partition(inst, sol)) throw ContractError("routes do not partition the targets");
  double total = 0.0;
  for (std::size_t j = 0; j < sol.routes.size(); ++j) {
    const auto& r = sol.routes[j];
    if (r.vehicle_id != j) throw ContractError("route vehicle ids out of order");
    if (r.tour.depot != inst.depot_vertex(j)) throw ContractError("route starts at wrong depot");
    if (r.dwell.size() != r.tour.order.size()) throw ContractError("dwell/tour length mismatch");
    const double c = tour_cost(r.tour, inst);
    if (std::abs(c - r.tour.cost) > 1e-9 * std::max(1.0, c)) {
      throw ContractError("cached tour cost is stale on vehicle " + std::to_string(j));
    }
    const double obj = route_objective(r, sol.params);
    if (std::abs(obj - r.objective) > rel_tol * std::max(obj, 1e-300)) {
      throw ContractError("cached objective is stale on vehicle " + std::to_string(j));
    }
    total += r.objective;
  }
  if (std::abs(total - sol.total) > rel_tol * std::max(std::abs(total), 1e-300)) {
    throw ContractError("solution total differs from the sum of route objectives");
  }
}

Solution initial_assignment(const Instance& inst, const InfoParams& params,
                            const SearchConfig& cfg) {
  params.validate();
  if (params.tau.size() != inst.num_targets()) throw ContractError("one tau per target required");
  const std::size_t m = inst.num_depots();
  const auto counts = balanced_counts(inst.num_targets(), m);
  const auto assignment = balanced_assignment(assignment_costs(inst, cfg.rng_seed), counts);

  std::vector<std::vector<VertexId>> parts(m);
  for (VertexId t = 0; t < inst.num_targets(); ++t) parts[assignment.vehicle_of[t]].push_back(t);

  Solution sol;
  sol.params = params;
  sol.provenance.seed = cfg.rng_seed;
  sol.provenance.strategy = cfg.maximal_strategy;
  sol.provenance.neighborhood = cfg.neighborhood;
  sol.provenance.top_k = cfg.top_k;
  sol.provenance.restarts = cfg.restarts;
  for (std::size_t j = 0; j < m; ++j) {
    sol.routes.push_back(realize_route(inst, j, std::move(parts[j]), params, cfg));
  }
  recompute_total(sol);
  sol.provenance.initial_total = sol.total;
  sol.provenance.incumbent_log = {sol.total};
  return sol;
}

std::optional<Solution> one_point_move(const Instance& inst, const Solution& sol,
                                       const SearchConfig& cfg) {
  const std::size_t m = sol.routes.size();
  if (m < 2) return std::nullopt;
  for (std::size_t j : select_maximal(sol, cfg.maximal_strategy, cfg.top_k)) {
    const auto& source = sol.routes[j];
    for (const auto& [t, removal] : removal_order(inst, source, sol.params)) {
      const double d_t = dwell_of(source, t);
      std::optional<std::size_t> best;
      ProxyEval best_ins;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        const auto ins = insertion_gain(inst, sol.routes[i], t, d_t, sol.params);
        if (!best || ins.objective_delta > best_ins.objective_delta) {
          best = i;
          best_ins = ins;
        }
      }
      if (!best) continue;
      if (removal.objective_delta + best_ins.objective_delta <= cfg.improve_eps) continue;
      auto dest_targets = sol.routes[*best].tour.order;
      dest_targets.push_back(t);
      if (auto next = realize_pair(inst, sol, j, targets_without(source, t), *best,
                                   std::move(dest_targets), d_t, t, cfg)) {
        return next;
      }
    }
  }
  return std::nullopt;
}

std::optional<Solution> one_point_swap(const Instance& inst, const Solution& sol,
                                       const SearchConfig& cfg) {
  const std::size_t m = sol.routes.size();
  if (m < 2) return std::nullopt;
  for (std::size_t j : select_maximal(sol, cfg.maximal_strategy, cfg.top_k)) {
    const auto& source = sol.routes[j];
    for (const auto& [t, removal] : removal_order(inst, source, sol.params)) {
      const double d_t = dwell_of(source, t);
      std::optional<std::size_t> best;
      ProxyEval best_ins;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        const auto ins = insertion_gain(inst, sol.routes[i], t, d_t, sol.params);
        if (!best || ins.objective_delta > best_ins.objective_delta) {
          best = i;
          best_ins = ins;
        }
      }
      if (!best) continue;
      const std::size_t i = *best;
      const auto& dest = sol.routes[i];
      // Estimated states after t leaves j and joins i; the return candidates
      // are scored against these estimates, not the realised routes.
      const auto source_est = estimated_without(source, position_of(source, t), removal);
      const auto dest_est = estimated_with(dest, t, d_t, best_ins);
      for (const auto& [u, back_removal] : removal_order(inst, dest_est, sol.params, t)) {
        const double d_u = dwell_of(dest_est, u);
        const auto back_ins = insertion_gain(inst, source_est, u, d_u, sol.params);
        const double est_change = (back_removal.estimated_objective - dest.objective) +
                                  (back_ins.estimated_objective - source.objective);
        if (est_change <= cfg.improve_eps) continue;

        auto src_targets = targets_without(source, t);
        src_targets.push_back(u);
        auto dst_targets = targets_without(dest, u);
        dst_targets.push_back(t);
        auto warm = dwell_by_target(inst, sol);
        Solution next = sol;
        next.routes[j] = realize_route(inst, j, std::move(src_targets), sol.params, cfg, warm);
        next.routes[i] = realize_route(inst, i, std::move(dst_targets), sol.params, cfg, warm);
        recompute_total(next);
        if (next.total > sol.total + cfg.improve_eps) return next;
      }
    }
  }
  return std::nullopt;
}

Solution local_search(const Instance& inst, Solution sol, const SearchConfig& cfg) {
  cfg.validate();
  while (true) {
    auto next = one_point_move(inst, sol, cfg);
    if (!next && cfg.neighborhood == Neighborhood::kMoveAndSwap) {
      next = one_point_swap(inst, sol, cfg);
    }
    if (!next) break;
    next->provenance.incumbent_log.push_back(next->total);
    sol = std::move(*next);
  }
  return sol;
}

Solution perturb_and_search(const Instance& inst, Solution sol, const SearchConfig& cfg) {
  cfg.validate();
  const std::size_t m = sol.routes.size();
  std::mt19937_64 rng(splitmix64(cfg.rng_seed ^ 0x70e27ULL));
  std::uniform_real_distribution<double> uniform_angle(0.0, 2.0 * std::numbers::pi);
  constexpr double kStep = 144.0 * std::numbers::pi / 180.0;

  std::vector<double> angles(m);
  for (double& a : angles) a = uniform_angle(rng);
  std::size_t failures = 0;
  Solution incumbent = std::move(sol);

  while (failures < cfg.perturb_rounds) {
    ++incumbent.provenance.perturbation_rounds;
    std::vector<Point> moved = inst.depots();
    for (std::size_t j = 0; j < m; ++j) {
      const auto& r = incumbent.routes[j];
      double radius = 0.0;
      if (!r.tour.order.empty()) {
        const Point& depot = inst.depots()[j];
        radius = 0.5 * (euclidean(depot, inst.location(r.tour.order.front())) +
                        euclidean(depot, inst.location(r.tour.order.back())));
      }
      moved[j] = perturb_depot(inst.depots()[j], radius, angles[j]);
    }
    const Instance shifted = inst.with_depots(moved);

    // same allocation and dwells, tours rebuilt around the shifted depots
    Solution carried = incumbent;
    const auto dwell = dwell_by_target(inst, incumbent);
    for (std::size_t j = 0; j < m; ++j) {
      auto& r = carried.routes[j];
      r.tour = solve_tsp(shifted.depot_vertex(j), r.tour.order, shifted, cfg.tsp_seed);
      r.dwell.clear();
      for (VertexId t : r.tour.order) r.dwell.push_back(dwell[t]);
      r.objective = route_objective(r, incumbent.params);
    }
    recompute_total(carried);
    carried.provenance.incumbent_log.clear();
    const Solution explored = local_search(shifted, std::move(carried), cfg);

    const auto warm = dwell_by_target(inst, explored);
    Solution restored = incumbent;
    for (std::size_t j = 0; j < m; ++j) {
      restored.routes[j] = realize_route(inst, j, explored.routes[j].tour.order,
                                         incumbent.params, cfg, warm);
    }
    recompute_total(restored);
    restored.provenance.incumbent_log.clear();
    Solution candidate = local_search(inst, std::move(restored), cfg);

    if (candidate.total > incumbent.total + cfg.improve_eps) {
      auto log = std::move(incumbent.provenance.incumbent_log);
      log.push_back(candidate.total);
      const std::size_t rounds = incumbent.provenance.perturbation_rounds;
      candidate.provenance = incumbent.provenance;
      candidate.provenance.incumbent_log = std::move(log);
      candidate.provenance.perturbation_rounds = rounds;
      incumbent = std::move(candidate);
      failures = 0;
      for (double& a : angles) a = uniform_angle(rng);
    } else {
      ++failures;
      for (double& a : angles) a += kStep;
    }
  }
  return incumbent;
}

Solution solve_multi(const Instance& inst, const InfoParams& params, const SearchConfig& cfg) {
  cfg.validate();
  params.validate();
  std::optional<Solution> best;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    SearchConfig run = cfg;
    run.rng_seed = splitmix64(cfg.rng_seed + r);
    Solution sol = initial_assignment(inst, params, run);
    sol = local_search(inst, std::move(sol), run);
    sol = perturb_and_search(inst, std::move(sol), run);
    if (!best || sol.total > best->total) best = std::move(sol);
  }
  best->provenance.seed = cfg.rng_seed;
  best->provenance.restarts = cfg.restarts;
  return std::move(*best);
}

Solution brute_force_multi(const Instance& inst, const InfoParams& params,
                           const DwellSolverConfig& dwell_cfg) {
  params.validate();
  const std::size_t n = inst.num_targets();
  const std::size_t m = inst.num_depots();
  if (n > kBruteForceMaxTargets || m > kBruteForceMaxVehicles) {
    throw CapacityError("brute force is limited to " + std::to_string(kBruteForceMaxTargets) +
                        " targets and " + std::to_string(kBruteForceMaxVehicles) + " vehicles");
  }
  if (params.tau.size() != n) throw ContractError("one tau per target required");

  SearchConfig cfg;
  cfg.dwell = dwell_cfg;
  std::vector<std::unordered_map<std::size_t, VehicleRoute>> cache(m);
  auto route_for = [&](std::size_t j, std::size_t mask) -> const VehicleRoute& {
    auto it = cache[j].find(mask);
    if (it != cache[j].end()) return it->second;
    std::vector<VertexId> targets;
    for (std::size_t t = 0; t < n; ++t) {
      if (mask & (std::size_t{1} << t)) targets.push_back(t);
    }
    VehicleRoute r;
    r.vehicle_id = j;
    r.tour = held_karp(inst.depot_vertex(j), targets, inst);
    if (!r.tour.order.empty()) {
      const auto taus = taus_of(r.tour.order, params);
      auto res = optimize_dwell(r.tour.cost, taus, params.alpha, dwell_cfg);
      r.dwell = std::move(res.dwells);
      r.objective = res.objective;
    }
    return cache[j].emplace(mask, std::move(r)).first->second;
  };

  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= m;
  double best_total = -1.0;
  std::vector<std::size_t> best_masks;
  std::vector<std::size_t> masks(m);
  for (std::size_t code = 0; code < combos; ++code) {
    std::fill(masks.begin(), masks.end(), 0);
    std::size_t c = code;
    for (std::size_t t = 0; t < n; ++t) {
      masks[c % m] |= std::size_t{1} << t;
      c /= m;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) total += route_for(j, masks[j]).objective;
    if (total > best_total) {
      best_total = total;
      best_masks = masks;
    }
  }

  Solution sol;
  sol.params = params;
  sol.provenance.restarts = 1;
  for (std::size_t j = 0; j < m; ++j) sol.routes.push_back(route_for(j, best_masks[j]));
  recompute_total(sol);
  sol.provenance.initial_total = sol.total;
  sol.provenance.incumbent_log = {sol.total};
  return sol;
}

Instance with_vehicle_count(const Instance& inst, std::size_t m) {
  if (m == 0) throw ContractError("need at least one vehicle");
  if (inst.num_depots() == m) return inst;
  if (inst.num_depots() == 1) {
    return inst.with_depots(std::vector<Point>(m, inst.depots().front()));
  }
  throw ContractError("instance has " + std::to_string(inst.num_depots()) +
                      " depots but " + std::to_string(m) + " vehicles were requested");
}

}  // namespace dwellroute
