#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dwellroute {

/// Vertex numbering used throughout the library: targets occupy [0, n),
/// depots occupy [n, n + m). Depot j of vehicle j is vertex n + j.
using VertexId = std::size_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class MetricMode {
  kExactEuclidean,
  kRoundedEuclidean,  // TSPLIB EUC_2D: nint(sqrt(dx^2 + dy^2))
};

std::string_view to_string(MetricMode mode);
MetricMode metric_from_string(std::string_view text);

double euclidean(const Point& a, const Point& b);

/// Dense symmetric travel-time matrix with zero diagonal.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(const std::vector<Point>& vertices, MetricMode mode);

  std::size_t size() const noexcept { return size_; }

  double operator()(VertexId a, VertexId b) const noexcept {
    return data_[a * size_ + b];
  }

 private:
  std::size_t size_ = 0;
  std::vector<double> data_;
};

/// Targets and depots of a routing problem. Immutable after construction, so
/// a single instance may be shared freely between threads.
class Instance {
 public:
  Instance(std::string name, std::vector<Point> targets, std::vector<Point> depots,
           MetricMode mode = MetricMode::kExactEuclidean);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Point>& targets() const noexcept { return targets_; }
  const std::vector<Point>& depots() const noexcept { return depots_; }
  MetricMode metric() const noexcept { return mode_; }

  std::size_t num_targets() const noexcept { return targets_.size(); }
  std::size_t num_depots() const noexcept { return depots_.size(); }
  std::size_t num_vertices() const noexcept { return targets_.size() + depots_.size(); }

  VertexId depot_vertex(std::size_t vehicle) const;
  bool is_depot(VertexId v) const noexcept { return v >= targets_.size(); }
  const Point& location(VertexId v) const;

  /// Bounds-checked travel time; throws std::out_of_range on bad ids.
  double cost(VertexId a, VertexId b) const;
  /// Unchecked travel time for hot loops.
  double cost_unchecked(VertexId a, VertexId b) const noexcept { return costs_(a, b); }
  const CostMatrix& costs() const noexcept { return costs_; }

  /// Same targets and metric, different depot locations.
  Instance with_depots(std::vector<Point> depots) const;
  Instance with_metric(MetricMode mode) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.name_ == b.name_ && a.targets_ == b.targets_ && a.depots_ == b.depots_ &&
           a.mode_ == b.mode_;
  }

 private:
  std::string name_;
  std::vector<Point> targets_;
  std::vector<Point> depots_;
  MetricMode mode_;
  CostMatrix costs_;
};

/// How the depot is chosen when reading a TSPLIB file.
struct TsplibOptions {
  /// When empty, node 1 becomes the single depot and nodes 2..N the targets.
  /// Otherwise every node is a target and these points are the depots.
  std::vector<Point> depots;
  MetricMode metric = MetricMode::kExactEuclidean;
};

/// Parses a TSPLIB NODE_COORD_SECTION document. Only EUC_2D (or an absent
/// EDGE_WEIGHT_TYPE) is accepted.
Instance parse_tsplib(std::string_view text, const TsplibOptions& options = {});

Instance load_json_instance(std::string_view text);
std::string save_json_instance(const Instance& instance);

enum class Distribution { kUniform, kClustered };

Distribution distribution_from_string(std::string_view text);

/// Uniform: i.i.d. points in [0, 1000]^2. Clustered: max(2, ceil(n/10))
/// Gaussian clusters with centres drawn uniformly in the same square.
Instance generate_random_instance(std::size_t num_targets, std::size_t num_depots,
                                  Distribution dist, std::uint64_t seed);

/// Point at distance `radius` from `p` along bearing `angle` (radians).
Point perturb_depot(const Point& p, double radius, double angle);

Instance read_instance_file(const std::string& path, const TsplibOptions& tsplib = {});

}  // namespace dwellroute
