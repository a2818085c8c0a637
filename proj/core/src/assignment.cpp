#include "dwellroute/assignment.hpp"

#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "dwellroute/errors.hpp"

namespace dwellroute {

std::vector<std::size_t> balanced_counts(std::size_t num_targets, std::size_t num_vehicles) {
  if (num_vehicles == 0) throw ContractError("need at least one vehicle");
  const std::size_t p = num_targets / num_vehicles;
  const std::size_t q = num_targets % num_vehicles;
  std::vector<std::size_t> counts(num_vehicles, p);
  for (std::size_t j = 0; j < q; ++j) counts[j] = p + 1;
  return counts;
}

std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost) {
    if (row.size() != n) throw ContractError("assignment matrix must be square");
  }
  if (n == 0) return {};
  // Potentials formulation with 1-based sentinel column 0.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of(n);
  for (std::size_t j = 1; j <= n; ++j) col_of[p[j] - 1] = j - 1;
  return col_of;
}

std::vector<std::vector<double>> assignment_costs(const Instance& inst, std::uint64_t seed) {
  const std::size_t m = inst.num_depots();
  std::vector<Point> sites = inst.depots();

  // group vehicles sharing a depot location, in order of first appearance
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> grouped(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    if (grouped[j]) continue;
    std::vector<std::size_t> g{j};
    grouped[j] = true;
    for (std::size_t k = j + 1; k < m; ++k) {
      if (!grouped[k] && inst.depots()[k] == inst.depots()[j]) {
        g.push_back(k);
        grouped[k] = true;
      }
    }
    groups.push_back(std::move(g));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    const double base = angle(rng);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double a = base + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                  static_cast<double>(g.size());
      sites[g[k]] = perturb_depot(inst.depots()[g[k]], 0.1, a);
    }
  }

  std::vector<std::vector<double>> cost(inst.num_targets(), std::vector<double>(m));
  for (std::size_t i = 0; i < inst.num_targets(); ++i) {
    for (std::size_t j = 0; j < m; ++j) cost[i][j] = euclidean(inst.targets()[i], sites[j]);
  }
  return cost;
}

BalancedAssignment balanced_assignment(const std::vector<std::vector<double>>& cost,
                                       const std::vector<std::size_t>& counts) {
  const std::size_t n = cost.size();
  std::size_t slots = 0;
  for (std::size_t c : counts) slots += c;
  if (slots != n) {
    throw ContractError("vehicle counts sum to " + std::to_string(slots) + " but there are " +
                        std::to_string(n) + " targets");
  }
  std::vector<std::size_t> slot_vehicle;
  slot_vehicle.reserve(n);
  for (std::size_t j = 0; j < counts.size(); ++j) slot_vehicle.insert(slot_vehicle.end(), counts[j], j);

  std::vector<std::vector<double>> square(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (cost[i].size() != counts.size()) throw ContractError("cost row has wrong width");
    for (std::size_t s = 0; s < n; ++s) square[i][s] = cost[i][slot_vehicle[s]];
  }
  const auto col = solve_assignment(square);
  BalancedAssignment out;
  out.vehicle_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.vehicle_of[i] = slot_vehicle[col[i]];
    out.cost += cost[i][out.vehicle_of[i]];
  }
  return out;
}

}  // namespace dwellroute
