#pragma once

#include <cstdint>

#include "dwellroute/dwell_opt.hpp"
#include "dwellroute/infogain.hpp"
#include "dwellroute/instance.hpp"
#include "dwellroute/tsp.hpp"

namespace dwellroute {

struct SingleSolution {
  Tour tour;
  DwellResult dwell;
  double objective = 0.0;
  /// tour.cost + sum of dwells; shared by every target.
  double revisit_time = 0.0;
};

/// One vehicle from `depot_index` visits every target. Because the common
/// revisit time enters only through exp(-alpha R), the cheapest tour and the
/// dwell optimum are found independently and then combined.
SingleSolution solve_single(const Instance& inst, std::size_t depot_index, const InfoParams& params,
                            const DwellSolverConfig& cfg = {}, std::uint64_t seed = 0);

/// Tour cost of one vehicle covering every target from depot 0, used for the
/// alpha = k / TSP parameterisation.
double single_vehicle_tsp_cost(const Instance& inst, std::uint64_t seed = 0);

}  // namespace dwellroute
