#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dwellroute/instance.hpp"

namespace dwellroute {

/// Closed tour depot -> order[0] -> ... -> order.back() -> depot.
struct Tour {
  VertexId depot = 0;
  std::vector<VertexId> order;
  double cost = 0.0;

  friend bool operator==(const Tour&, const Tour&) = default;
};

/// Targets above this count never reach the exact solver through solve_tsp.
inline constexpr std::size_t kExactDispatchLimit = 13;
/// Hard cap on held_karp (2^18 * 18 DP cells).
inline constexpr std::size_t kHeldKarpCap = 18;

/// Closed-loop cost; validates every id against the instance.
double tour_cost(VertexId depot, std::span<const VertexId> order, const Instance& inst);
double tour_cost(const Tour& tour, const Instance& inst);

/// Exact minimum-cost tour by bitmask dynamic programming.
/// Throws CapacityError above kHeldKarpCap targets.
Tour held_karp(VertexId depot, std::span<const VertexId> targets, const Instance& inst);

/// 2-opt and Or-opt (segments of 1..3, both orientations) to a joint local
/// optimum. Each accepted exchange lowers the cost by more than 1e-9.
/// Returns the number of exchanges applied.
std::size_t improve_tour(Tour& tour, const Instance& inst, std::uint64_t seed);

/// Nearest neighbour from the depot followed by improve_tour.
Tour solve_tsp_heuristic(VertexId depot, std::span<const VertexId> targets, const Instance& inst,
                         std::uint64_t seed);

/// held_karp up to kExactDispatchLimit targets, solve_tsp_heuristic beyond.
Tour solve_tsp(VertexId depot, std::span<const VertexId> targets, const Instance& inst,
               std::uint64_t seed);

}  // namespace dwellroute
