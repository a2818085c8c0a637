#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dwellroute/dwell_opt.hpp"
#include "dwellroute/infogain.hpp"
#include "dwellroute/instance.hpp"
#include "dwellroute/tsp.hpp"

namespace dwellroute {

enum class Neighborhood { kMoveOnly, kMoveAndSwap };

/// Rule for picking the vehicle a target is taken from.
enum class MaximalStrategy {
  kMinObjective,
  kMaxObjective,
  kMostTargets,
  kLongestTour,
  kCombination,  // longest tour first, then most targets
};

std::string_view to_string(Neighborhood n);
std::string_view to_string(MaximalStrategy s);
Neighborhood neighborhood_from_string(std::string_view text);
MaximalStrategy strategy_from_string(std::string_view text);

struct SearchConfig {
  Neighborhood neighborhood = Neighborhood::kMoveAndSwap;
  MaximalStrategy maximal_strategy = MaximalStrategy::kCombination;
  int top_k = 2;
  std::size_t restarts = 3;
  std::size_t perturb_rounds = 5;
  double improve_eps = 1e-9;
  std::uint64_t rng_seed = 0;
  /// Seed handed to the tour heuristic; independent of rng_seed so that a
  /// given target set always maps to the same tour.
  std::uint64_t tsp_seed = 0;
  DwellSolverConfig dwell;

  void validate() const;
};

struct VehicleRoute {
  std::size_t vehicle_id = 0;
  Tour tour;
  /// dwell[k] belongs to tour.order[k]
  std::vector<double> dwell;
  double objective = 0.0;
};

struct Provenance {
  std::uint64_t seed = 0;
  MaximalStrategy strategy = MaximalStrategy::kCombination;
  Neighborhood neighborhood = Neighborhood::kMoveAndSwap;
  int top_k = 2;
  std::size_t restarts = 1;
  /// Total objective of the initial assignment of the winning run.
  double initial_total = 0.0;
  /// Every committed incumbent total, in order, for the winning run.
  std::vector<double> incumbent_log;
  std::size_t perturbation_rounds = 0;
};

struct Solution {
  std::vector<VehicleRoute> routes;
  double total = 0.0;
  InfoParams params;
  Provenance provenance;
};

struct ProxyEval {
  /// c(prev, t) + c(t, next) - c(prev, next)
  double savings = 0.0;
  /// cheapest c(p, t) + c(t, p') - c(p, p') over the tour's edges
  double insertion_increase = 0.0;
  double estimated_objective = 0.0;
  double objective_delta = 0.0;
  /// Target is spliced in after this many tour positions (0 = right after the depot).
  std::size_t insert_position = 0;
};

/// Per-route objective at the stored dwells.
double route_objective(const VehicleRoute& route, const InfoParams& params);

/// Estimated change in a route's objective when `t` leaves it: the tour is
/// shortened by the savings of t and every other dwell is kept.
ProxyEval removal_gain(const Instance& inst, const VehicleRoute& route, VertexId t,
                       const InfoParams& params);
ProxyEval removal_gain(const Instance& inst, const Solution& sol, std::size_t vehicle, VertexId t);

/// Estimated change when `t` (carrying dwell d_t) is spliced into the
/// cheapest edge of the route; existing dwells are kept.
ProxyEval insertion_gain(const Instance& inst, const VehicleRoute& route, VertexId t, double d_t,
                         const InfoParams& params);
ProxyEval insertion_gain(const Instance& inst, const Solution& sol, std::size_t vehicle, VertexId t,
                         double d_t);

/// Maximal vehicles in the order they are tried. Ties go to the lower index.
std::vector<std::size_t> select_maximal(const Solution& sol, MaximalStrategy strategy, int top_k);

/// Tour by solve_tsp and dwells by optimize_dwell for one vehicle.
/// `warm_dwell` is indexed by target id; empty means start from tau.
VehicleRoute realize_route(const Instance& inst, std::size_t vehicle, std::vector<VertexId> targets,
                           const InfoParams& params, const SearchConfig& cfg,
                           std::span<const double> warm_dwell = {});

/// Throws ContractError unless the routes partition the targets and every
/// cached objective and total agree with a fresh evaluation.
void check_solution(const Instance& inst, const Solution& sol, double rel_tol = 1e-9);
bool is_partition(const Instance& inst, const Solution& sol);

/// Balanced assignment start: counts from balanced_counts, minimum total
/// target-depot distance, then tours and dwells per vehicle.
Solution initial_assignment(const Instance& inst, const InfoParams& params, const SearchConfig& cfg);

/// 1-point move: returns the first realised improvement, or nullopt.
std::optional<Solution> one_point_move(const Instance& inst, const Solution& sol,
                                       const SearchConfig& cfg);

/// 1-point swap: returns the first realised improvement, or nullopt.
std::optional<Solution> one_point_swap(const Instance& inst, const Solution& sol,
                                       const SearchConfig& cfg);

/// Applies moves (and swaps when enabled) until neither improves.
Solution local_search(const Instance& inst, Solution sol, const SearchConfig& cfg);

/// Depot-perturbation restarts around a local optimum.
Solution perturb_and_search(const Instance& inst, Solution sol, const SearchConfig& cfg);

/// Best of cfg.restarts runs of initial_assignment -> local_search -> perturb_and_search.
Solution solve_multi(const Instance& inst, const InfoParams& params, const SearchConfig& cfg);

inline constexpr std::size_t kBruteForceMaxTargets = 9;
inline constexpr std::size_t kBruteForceMaxVehicles = 3;

/// Exhaustive search over all target-to-vehicle maps (empty routes allowed)
/// with exact tours. Throws CapacityError beyond 9 targets or 3 vehicles.
Solution brute_force_multi(const Instance& inst, const InfoParams& params,
                           const DwellSolverConfig& dwell_cfg = {});

/// Instance with exactly m depots: a single depot is replicated m times.
Instance with_vehicle_count(const Instance& inst, std::size_t m);

}  // namespace dwellroute
