#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dwellroute/instance.hpp"
#include "dwellroute/multi_vehicle.hpp"
#include "dwellroute/single_vehicle.hpp"

namespace dwellroute {

enum class AlphaMode {
  kAbsolute,  // alpha used as given
  kPerTsp,    // alpha = k / TSP*, TSP* from the single-vehicle tour heuristic
};

std::string_view to_string(AlphaMode mode);
AlphaMode alpha_mode_from_string(std::string_view text);

struct RouteRecord {
  std::size_t vehicle = 0;
  std::vector<VertexId> order;
  std::vector<double> dwell;
  double tour_cost = 0.0;
  double objective = 0.0;

  friend bool operator==(const RouteRecord&, const RouteRecord&) = default;
};

/// Everything needed to reproduce, tabulate or plot one solver run.
struct RunRecord {
  std::string solver = "multi";  // "single" or "multi"
  std::string instance_name;
  std::size_t n = 0;
  std::size_t m = 0;
  AlphaMode alpha_mode = AlphaMode::kAbsolute;
  /// k in alpha = k / TSP* (per-tsp mode) or alpha itself (absolute mode).
  double alpha_input = 0.0;
  double alpha = 0.0;
  double tsp_star = 0.0;
  double tau = 1.0;
  std::string metric = "exact";
  std::string strategy = "combination";
  std::string neighborhood = "move-swap";
  int top_k = 2;
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
  double initial_obj = 0.0;
  double final_obj = 0.0;
  double pct_improve = 0.0;
  std::vector<RouteRecord> routes;
  std::vector<Point> targets;
  std::vector<Point> depots;
  double wall_s = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// 100 (final - initial) / initial, or 0 when initial is not positive.
double percent_improvement(double initial, double final_value);

RunRecord make_record(const Instance& inst, const Solution& sol);
RunRecord make_record(const Instance& inst, const SingleSolution& sol, const InfoParams& params);

std::string record_to_json(const RunRecord& rec);
/// Throws SchemaError on malformed input.
RunRecord record_from_json(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "instance,n,m,alpha,tau,strategy,neighborhood,top_k,seed,initial_obj,final_obj,pct_improve,"
    "wall_s";

std::string record_to_csv_row(const RunRecord& rec);
/// Fills only the CSV columns; throws SchemaError on malformed rows.
RunRecord record_from_csv_row(std::string_view row);

/// Route drawing: depots as squares, targets as circles scaled by dwell, one
/// closed polyline per non-empty route, legend with per-vehicle objective.
std::string render_svg(const RunRecord& rec);

}  // namespace dwellroute
