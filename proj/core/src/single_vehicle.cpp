#include "dwellroute/single_vehicle.hpp"

#include <numeric>
#include <string>

#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

std::vector<VertexId> all_targets(const Instance& inst) {
  std::vector<VertexId> ids(inst.num_targets());
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return ids;
}

}  // namespace

SingleSolution solve_single(const Instance& inst, std::size_t depot_index, const InfoParams& params,
                            const DwellSolverConfig& cfg, std::uint64_t seed) {
  params.validate();
  if (params.tau.size() != inst.num_targets()) {
    throw ContractError("expected " + std::to_string(inst.num_targets()) + " taus, got " +
                        std::to_string(params.tau.size()));
  }
  const auto targets = all_targets(inst);
  SingleSolution sol;
  sol.tour = solve_tsp(inst.depot_vertex(depot_index), targets, inst, seed);

  std::vector<double> taus;
  taus.reserve(sol.tour.order.size());
  for (VertexId t : sol.tour.order) taus.push_back(params.tau[t]);
  sol.dwell = optimize_dwell(sol.tour.cost, taus, params.alpha, cfg);

  double dwell_sum = 0.0;
  for (double d : sol.dwell.dwells) dwell_sum += d;
  sol.revisit_time = sol.tour.cost + dwell_sum;
  sol.objective = vehicle_objective(sol.tour.cost, sol.dwell.dwells, taus, params.alpha);
  return sol;
}

double single_vehicle_tsp_cost(const Instance& inst, std::uint64_t seed) {
  const auto targets = all_targets(inst);
  return solve_tsp(inst.depot_vertex(0), targets, inst, seed).cost;
}

}  // namespace dwellroute
