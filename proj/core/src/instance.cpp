#include "dwellroute/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

bool finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

std::string_view to_string(MetricMode mode) {
  return mode == MetricMode::kExactEuclidean ? "exact" : "rounded";
}

MetricMode metric_from_string(std::string_view text) {
  if (text == "exact") return MetricMode::kExactEuclidean;
  if (text == "rounded") return MetricMode::kRoundedEuclidean;
  throw SchemaError("unknown metric '" + std::string(text) + "' (expected exact|rounded)");
}

double euclidean(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

CostMatrix::CostMatrix(const std::vector<Point>& vertices, MetricMode mode)
    : size_(vertices.size()), data_(size_ * size_, 0.0) {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      double d = euclidean(vertices[i], vertices[j]);
      // TSPLIB nint(): (int)(x + 0.5)
      if (mode == MetricMode::kRoundedEuclidean) d = std::floor(d + 0.5);
      data_[i * size_ + j] = d;
      data_[j * size_ + i] = d;
    }
  }
}

Instance::Instance(std::string name, std::vector<Point> targets, std::vector<Point> depots,
                   MetricMode mode)
    : name_(std::move(name)), targets_(std::move(targets)), depots_(std::move(depots)), mode_(mode) {
  if (targets_.empty()) throw ContractError("instance needs at least one target");
  if (depots_.empty()) throw ContractError("instance needs at least one depot");
  for (const auto& p : targets_) {
    if (!finite(p)) throw DomainError("target coordinate is not finite");
  }
  for (const auto& p : depots_) {
    if (!finite(p)) throw DomainError("depot coordinate is not finite");
  }
  std::vector<Point> all = targets_;
  all.insert(all.end(), depots_.begin(), depots_.end());
  costs_ = CostMatrix(all, mode_);
}

VertexId Instance::depot_vertex(std::size_t vehicle) const {
  if (vehicle >= depots_.size()) {
    throw std::out_of_range("vehicle index " + std::to_string(vehicle) + " out of range");
  }
  return targets_.size() + vehicle;
}

const Point& Instance::location(VertexId v) const {
  if (v < targets_.size()) return targets_[v];
  if (v < num_vertices()) return depots_[v - targets_.size()];
  throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
}

double Instance::cost(VertexId a, VertexId b) const {
  const auto n = num_vertices();
  if (a >= n || b >= n) {
    throw std::out_of_range("vertex id " + std::to_string(std::max(a, b)) + " out of range");
  }
  return costs_(a, b);
}

Instance Instance::with_depots(std::vector<Point> depots) const {
  return Instance(name_, targets_, std::move(depots), mode_);
}

Instance Instance::with_metric(MetricMode mode) const {
  return Instance(name_, targets_, depots_, mode);
}

Instance parse_tsplib(std::string_view text, const TsplibOptions& options) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::string name = "tsplib";
  std::optional<std::size_t> dimension;
  bool in_coords = false;
  bool saw_coords = false;
  std::vector<Point> nodes;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (upper(t) == "EOF") break;

    if (in_coords) {
      std::istringstream row(t);
      long long id = 0;
      Point p;
      std::string extra;
      if (!(row >> id >> p.x >> p.y)) {
        // a keyword line ends the coordinate section
        if (std::isalpha(static_cast<unsigned char>(t.front()))) {
          in_coords = false;
        } else {
          throw ParseError(line_no, "malformed coordinate line '" + t + "'");
        }
      } else {
        if (row >> extra) throw ParseError(line_no, "trailing data on coordinate line '" + t + "'");
        if (id != static_cast<long long>(nodes.size()) + 1) {
          throw ParseError(line_no, "node id " + std::to_string(id) + " out of sequence");
        }
        if (!finite(p)) throw ParseError(line_no, "non-finite coordinate");
        nodes.push_back(p);
        continue;
      }
    }

    const std::string key_line = upper(t);
    if (key_line.rfind("NODE_COORD_SECTION", 0) == 0) {
      in_coords = true;
      saw_coords = true;
      continue;
    }
    if (key_line.rfind("DISPLAY_DATA_SECTION", 0) == 0 ||
        key_line.rfind("EDGE_WEIGHT_SECTION", 0) == 0 || key_line.rfind("TOUR_SECTION", 0) == 0) {
      // unsupported sections: skip their numeric bodies
      in_coords = false;
      continue;
    }
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      if (std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '-') continue;
      throw ParseError(line_no, "unrecognised line '" + t + "'");
    }
    const std::string key = upper(trim(std::string_view(t).substr(0, colon)));
    const std::string value = trim(std::string_view(t).substr(colon + 1));
    if (key == "NAME") {
      name = value;
    } else if (key == "TYPE") {
      const auto v = upper(value);
      if (v != "TSP") throw UnsupportedFormatError("unsupported TSPLIB TYPE '" + value + "'");
    } else if (key == "DIMENSION") {
      try {
        dimension = static_cast<std::size_t>(std::stoull(value));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad DIMENSION '" + value + "'");
      }
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (upper(value) != "EUC_2D") {
        throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + value +
                                     "' (only EUC_2D is supported)");
      }
    }
  }

  if (!saw_coords) throw ParseError(line_no, "missing NODE_COORD_SECTION");
  if (dimension && *dimension != nodes.size()) {
    throw ParseError(line_no, "DIMENSION " + std::to_string(*dimension) + " but " +
                                  std::to_string(nodes.size()) + " coordinates");
  }
  if (options.depots.empty()) {
    if (nodes.size() < 2) throw ParseError(line_no, "need at least two nodes (depot + target)");
    std::vector<Point> depots{nodes.front()};
    std::vector<Point> targets(nodes.begin() + 1, nodes.end());
    return Instance(name, std::move(targets), std::move(depots), options.metric);
  }
  if (nodes.empty()) throw ParseError(line_no, "no coordinates");
  return Instance(name, std::move(nodes), options.depots, options.metric);
}

namespace {

std::vector<Point> points_from_json(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
  const auto& arr = j.at(field);
  if (!arr.is_array()) throw SchemaError(std::string("field '") + field + "' must be an array");
  std::vector<Point> out;
  out.reserve(arr.size());
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw SchemaError(std::string("entries of '") + field + "' must be [x, y] number pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

}  // namespace

Instance load_json_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  if (j.contains("v") && (!j["v"].is_number_integer() || j["v"].get<int>() != 1)) {
    throw SchemaError("unsupported instance version (expected \"v\": 1)");
  }
  std::string name = "instance";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("field 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  auto mode = MetricMode::kExactEuclidean;
  if (j.contains("metric")) {
    if (!j["metric"].is_string()) throw SchemaError("field 'metric' must be a string");
    mode = metric_from_string(j["metric"].get<std::string>());
  }
  auto targets = points_from_json(j, "targets");
  auto depots = points_from_json(j, "depots");
  if (targets.empty()) throw SchemaError("'targets' must not be empty");
  if (depots.empty()) throw SchemaError("'depots' must not be empty");
  try {
    return Instance(std::move(name), std::move(targets), std::move(depots), mode);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

std::string save_json_instance(const Instance& instance) {
  auto pts = [](const std::vector<Point>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& p : v) arr.push_back({p.x, p.y});
    return arr;
  };
  nlohmann::json j;
  j["v"] = 1;
  j["name"] = instance.name();
  j["targets"] = pts(instance.targets());
  j["depots"] = pts(instance.depots());
  j["metric"] = std::string(to_string(instance.metric()));
  return j.dump(1);
}

Distribution distribution_from_string(std::string_view text) {
  if (text == "uniform") return Distribution::kUniform;
  if (text == "clustered") return Distribution::kClustered;
  throw SchemaError("unknown distribution '" + std::string(text) + "'");
}

Instance generate_random_instance(std::size_t num_targets, std::size_t num_depots,
                                  Distribution dist, std::uint64_t seed) {
  if (num_targets == 0 || num_depots == 0) {
    throw ContractError("generate_random_instance needs n >= 1 and m >= 1");
  }
  constexpr double kSide = 1000.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, kSide);

  std::vector<Point> targets;
  targets.reserve(num_targets);
  if (dist == Distribution::kUniform) {
    for (std::size_t i = 0; i < num_targets; ++i) targets.push_back({unit(rng), unit(rng)});
  } else {
    const std::size_t k = std::max<std::size_t>(2, (num_targets + 9) / 10);
    std::vector<Point> centres;
    for (std::size_t c = 0; c < k; ++c) centres.push_back({unit(rng), unit(rng)});
    std::normal_distribution<double> spread(0.0, 0.05 * kSide);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::size_t i = 0; i < num_targets; ++i) {
      const auto& c = centres[pick(rng)];
      targets.push_back({c.x + spread(rng), c.y + spread(rng)});
    }
  }
  std::vector<Point> depots;
  for (std::size_t j = 0; j < num_depots; ++j) depots.push_back({unit(rng), unit(rng)});

  std::string name = (dist == Distribution::kUniform ? "uniform" : "clustered");
  name += "-n" + std::to_string(num_targets) + "-m" + std::to_string(num_depots) + "-s" +
          std::to_string(seed);
  return Instance(std::move(name), std::move(targets), std::move(depots));
}

Point perturb_depot(const Point& p, double radius, double angle) {
  if (!(radius >= 0.0)) throw DomainError("perturbation radius must be >= 0");
  return {p.x + radius * std::cos(angle), p.y + radius * std::sin(angle)};
}

Instance read_instance_file(const std::string& path, const TsplibOptions& tsplib) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return load_json_instance(text);
  return parse_tsplib(text, tsplib);
}

}  // namespace dwellroute
