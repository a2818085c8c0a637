#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dwellroute/instance.hpp"

namespace dwellroute {

/// Load-balanced target counts: the first (n mod m) vehicles receive
/// ceil(n/m) targets, the rest floor(n/m).
std::vector<std::size_t> balanced_counts(std::size_t num_targets, std::size_t num_vehicles);

/// Square min-cost assignment (Hungarian algorithm, O(n^3)).
/// Returns column index assigned to each row.
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost);

/// Target-to-vehicle distance matrix [target][vehicle] used by the initial
/// assignment. Vehicles whose depots coincide are spread symmetrically on a
/// circle of radius 0.1 around the shared location, starting from a random
/// angle drawn from `seed`.
std::vector<std::vector<double>> assignment_costs(const Instance& inst, std::uint64_t seed);

struct BalancedAssignment {
  /// vehicle index per target
  std::vector<std::size_t> vehicle_of;
  double cost = 0.0;
};

/// Minimises sum of cost[target][vehicle] subject to every target going to
/// exactly one vehicle and vehicle j receiving counts[j] targets. Solved by
/// expanding each vehicle into counts[j] identical slots.
BalancedAssignment balanced_assignment(const std::vector<std::vector<double>>& cost,
                                       const std::vector<std::size_t>& counts);

}  // namespace dwellroute
