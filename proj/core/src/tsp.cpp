#include "dwellroute/tsp.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

constexpr double kImproveEps = 1e-9;
constexpr double kMinGain = kImproveEps;
constexpr std::size_t kKicksPerTarget = 2;
constexpr std::size_t kMaxKicks = 200;

void check_targets(VertexId depot, std::span<const VertexId> targets, const Instance& inst) {
  if (depot >= inst.num_vertices() || !inst.is_depot(depot)) {
    throw std::out_of_range("depot vertex " + std::to_string(depot) + " is not a depot");
  }
  std::vector<bool> seen(inst.num_targets(), false);
  for (VertexId t : targets) {
    if (t >= inst.num_targets()) {
      throw std::out_of_range("target id " + std::to_string(t) + " out of range");
    }
    if (seen[t]) throw ContractError("duplicate target " + std::to_string(t) + " in tour");
    seen[t] = true;
  }
}

double cycle_cost(const std::vector<VertexId>& cycle, const Instance& inst) {
  double c = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    c += inst.cost_unchecked(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return c;
}

// cycle[0] is the depot throughout.
bool two_opt_pass(std::vector<VertexId>& cycle, const Instance& inst, std::mt19937_64& rng,
                  std::size_t& moves) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  std::vector<std::size_t> starts(n - 2);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  std::shuffle(starts.begin(), starts.end(), rng);
  bool improved = false;
  for (std::size_t i : starts) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const VertexId a = cycle[i], b = cycle[i + 1];
      const VertexId c = cycle[j], d = cycle[(j + 1) % n];
      const double delta = inst.cost_unchecked(a, c) + inst.cost_unchecked(b, d) -
                           inst.cost_unchecked(a, b) - inst.cost_unchecked(c, d);
      if (delta < -kImproveEps) {
        std::reverse(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1),
                     cycle.begin() + static_cast<std::ptrdiff_t>(j + 1));
        improved = true;
        ++moves;
      }
    }
  }
  return improved;
}

bool or_opt_pass(std::vector<VertexId>& cycle, const Instance& inst, std::mt19937_64& rng,
                 std::size_t& moves) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  bool improved = false;
  std::vector<std::size_t> starts(n - 1);
  std::iota(starts.begin(), starts.end(), std::size_t{1});
  std::shuffle(starts.begin(), starts.end(), rng);
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t i : starts) {
      if (i + len > n) continue;  // segment must not wrap onto the depot
      const std::size_t m = cycle.size();
      const VertexId prev = cycle[i - 1];
      const VertexId next = cycle[(i + len) % m];
      const VertexId first = cycle[i];
      const VertexId last = cycle[i + len - 1];
      const double removal = inst.cost_unchecked(prev, first) + inst.cost_unchecked(last, next) -
                             inst.cost_unchecked(prev, next);
      if (removal <= kImproveEps) continue;

      double best = -kImproveEps;
      std::size_t best_pos = m;
      bool best_reversed = false;
      for (std::size_t p = 0; p < m; ++p) {
        // edge (cycle[p], cycle[p+1]) must lie outside the segment and not be
        // the edge that closes over it
        if (p + 1 >= i && p < i + len) continue;
        if (p == i - 1) continue;
        const VertexId u = cycle[p];
        const VertexId v = cycle[(p + 1) % m];
        const double base = inst.cost_unchecked(u, v);
        const double fwd = inst.cost_unchecked(u, first) + inst.cost_unchecked(last, v) - base;
        const double rev = inst.cost_unchecked(u, last) + inst.cost_unchecked(first, v) - base;
        if (fwd - removal < best) {
          best = fwd - removal;
          best_pos = p;
          best_reversed = false;
        }
        if (len > 1 && rev - removal < best) {
          best = rev - removal;
          best_pos = p;
          best_reversed = true;
        }
      }
      if (best_pos == m) continue;

      std::vector<VertexId> seg(cycle.begin() + static_cast<std::ptrdiff_t>(i),
                                cycle.begin() + static_cast<std::ptrdiff_t>(i + len));
      if (best_reversed) std::reverse(seg.begin(), seg.end());
      const VertexId anchor = cycle[best_pos];
      cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i),
                  cycle.begin() + static_cast<std::ptrdiff_t>(i + len));
      const auto at = std::find(cycle.begin(), cycle.end(), anchor);
      cycle.insert(at + 1, seg.begin(), seg.end());
      improved = true;
      ++moves;
    }
  }
  return improved;
}

}  // namespace

double tour_cost(VertexId depot, std::span<const VertexId> order, const Instance& inst) {
  if (order.empty()) {
    (void)inst.cost(depot, depot);
    return 0.0;
  }
  double c = inst.cost(depot, order.front());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) c += inst.cost(order[i], order[i + 1]);
  c += inst.cost(order.back(), depot);
  return c;
}

double tour_cost(const Tour& tour, const Instance& inst) {
  return tour_cost(tour.depot, tour.order, inst);
}

Tour held_karp(VertexId depot, std::span<const VertexId> targets, const Instance& inst) {
  const std::size_t k = targets.size();
  if (k > kHeldKarpCap) {
    throw CapacityError("held_karp supports at most " + std::to_string(kHeldKarpCap) +
                        " targets, got " + std::to_string(k));
  }
  check_targets(depot, targets, inst);
  Tour tour{depot, {}, 0.0};
  if (k == 0) return tour;
  if (k == 1) {
    tour.order = {targets[0]};
    tour.cost = tour_cost(tour, inst);
    return tour;
  }

  const std::size_t full = (std::size_t{1} << k) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dp((full + 1) * k, kInf);
  std::vector<std::uint8_t> parent((full + 1) * k, 0);
  auto cell = [k](std::size_t mask, std::size_t j) { return mask * k + j; };

  for (std::size_t j = 0; j < k; ++j) {
    dp[cell(std::size_t{1} << j, j)] = inst.cost_unchecked(depot, targets[j]);
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double base = dp[cell(mask, j)];
      if (base == kInf) continue;
      for (std::size_t nxt = 0; nxt < k; ++nxt) {
        if (mask & (std::size_t{1} << nxt)) continue;
        const std::size_t nm = mask | (std::size_t{1} << nxt);
        const double cand = base + inst.cost_unchecked(targets[j], targets[nxt]);
        if (cand < dp[cell(nm, nxt)]) {
          dp[cell(nm, nxt)] = cand;
          parent[cell(nm, nxt)] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  double best = kInf;
  std::size_t last = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double c = dp[cell(full, j)] + inst.cost_unchecked(targets[j], depot);
    if (c < best) {
      best = c;
      last = j;
    }
  }
  std::vector<VertexId> rev;
  std::size_t mask = full;
  std::size_t j = last;
  while (true) {
    rev.push_back(targets[j]);
    const std::size_t pm = mask & ~(std::size_t{1} << j);
    if (pm == 0) break;
    j = parent[cell(mask, j)];
    mask = pm;
  }
  tour.order.assign(rev.rbegin(), rev.rend());
  tour.cost = tour_cost(tour, inst);
  return tour;
}

std::size_t improve_tour(Tour& tour, const Instance& inst, std::uint64_t seed) {
  check_targets(tour.depot, tour.order, inst);
  std::vector<VertexId> cycle;
  cycle.reserve(tour.order.size() + 1);
  cycle.push_back(tour.depot);
  cycle.insert(cycle.end(), tour.order.begin(), tour.order.end());
  std::mt19937_64 rng(seed);
  std::size_t moves = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    while (two_opt_pass(cycle, inst, rng, moves)) changed = true;
    while (or_opt_pass(cycle, inst, rng, moves)) changed = true;
    if (changed) {
      // one more round only if Or-opt opened up new 2-opt moves
      changed = two_opt_pass(cycle, inst, rng, moves);
    }
  }
  tour.order.assign(cycle.begin() + 1, cycle.end());
  tour.cost = cycle_cost(cycle, inst);
  return moves;
}

Tour solve_tsp_heuristic(VertexId depot, std::span<const VertexId> targets, const Instance& inst,
                         std::uint64_t seed) {
  check_targets(depot, targets, inst);
  Tour tour{depot, {}, 0.0};
  std::vector<VertexId> left(targets.begin(), targets.end());
  std::sort(left.begin(), left.end());
  VertexId at = depot;
  while (!left.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < left.size(); ++i) {
      if (inst.cost_unchecked(at, left[i]) < inst.cost_unchecked(at, left[best])) best = i;
    }
    at = left[best];
    tour.order.push_back(at);
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(best));
  }
  improve_tour(tour, inst, seed);

  // iterated local search: double-bridge kick, re-improve, keep if shorter
  const std::size_t n = tour.order.size();
  if (n < 8) return tour;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t kicks = std::min<std::size_t>(kKicksPerTarget * n, kMaxKicks);
  for (std::size_t k = 0; k < kicks; ++k) {
    std::array<std::size_t, 3> cut{};
    std::uniform_int_distribution<std::size_t> pos(1, n - 1);
    do {
      for (auto& c : cut) c = pos(rng);
      std::sort(cut.begin(), cut.end());
    } while (cut[0] == cut[1] || cut[1] == cut[2]);
    Tour trial{depot, {}, 0.0};
    const auto& o = tour.order;
    trial.order.reserve(n);
    trial.order.insert(trial.order.end(), o.begin(), o.begin() + cut[0]);
    trial.order.insert(trial.order.end(), o.begin() + cut[1], o.begin() + cut[2]);
    trial.order.insert(trial.order.end(), o.begin() + cut[0], o.begin() + cut[1]);
    trial.order.insert(trial.order.end(), o.begin() + cut[2], o.end());
    trial.cost = tour_cost(depot, trial.order, inst);
    improve_tour(trial, inst, seed + k + 1);
    if (trial.cost < tour.cost - kMinGain) tour = std::move(trial);
  }
  return tour;
}

Tour solve_tsp(VertexId depot, std::span<const VertexId> targets, const Instance& inst,
               std::uint64_t seed) {
  if (targets.size() <= kExactDispatchLimit) return held_karp(depot, targets, inst);
  return solve_tsp_heuristic(depot, targets, inst, seed);
}

}  // namespace dwellroute
