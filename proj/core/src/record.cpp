#include "dwellroute/record.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

std::string fmt_double(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(std::string_view row) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r' && c != '\n') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

nlohmann::json points_json(const std::vector<Point>& pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Point> points_from(const nlohmann::json& arr) {
  std::vector<Point> out;
  for (const auto& p : arr) out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return out;
}

std::vector<RouteRecord> route_records(const Solution& sol) {
  std::vector<RouteRecord> out;
  for (const auto& r : sol.routes) {
    out.push_back({r.vehicle_id, r.tour.order, r.dwell, r.tour.cost, r.objective});
  }
  return out;
}

}  // namespace

std::string_view to_string(AlphaMode mode) {
  return mode == AlphaMode::kAbsolute ? "absolute" : "per-tsp";
}

AlphaMode alpha_mode_from_string(std::string_view text) {
  if (text == "absolute") return AlphaMode::kAbsolute;
  if (text == "per-tsp") return AlphaMode::kPerTsp;
  throw SchemaError("unknown alpha mode '" + std::string(text) + "' (absolute|per-tsp)");
}

double percent_improvement(double initial, double final_value) {
  if (!(initial > 0.0)) return 0.0;
  return 100.0 * (final_value - initial) / initial;
}

RunRecord make_record(const Instance& inst, const Solution& sol) {
  RunRecord rec;
  rec.solver = "multi";
  rec.instance_name = inst.name();
  rec.n = inst.num_targets();
  rec.m = sol.routes.size();
  rec.alpha = sol.params.alpha;
  rec.alpha_input = sol.params.alpha;
  rec.tau = sol.params.tau.empty() ? 0.0 : sol.params.tau.front();
  rec.metric = std::string(to_string(inst.metric()));
  rec.strategy = std::string(to_string(sol.provenance.strategy));
  rec.neighborhood = std::string(to_string(sol.provenance.neighborhood));
  rec.top_k = sol.provenance.top_k;
  rec.restarts = sol.provenance.restarts;
  rec.seed = sol.provenance.seed;
  rec.initial_obj = sol.provenance.initial_total;
  rec.final_obj = sol.total;
  rec.pct_improve = percent_improvement(rec.initial_obj, rec.final_obj);
  rec.routes = route_records(sol);
  rec.targets = inst.targets();
  rec.depots = inst.depots();
  return rec;
}

RunRecord make_record(const Instance& inst, const SingleSolution& sol, const InfoParams& params) {
  RunRecord rec;
  rec.solver = "single";
  rec.instance_name = inst.name();
  rec.n = inst.num_targets();
  rec.m = 1;
  rec.alpha = params.alpha;
  rec.alpha_input = params.alpha;
  rec.tau = params.tau.empty() ? 0.0 : params.tau.front();
  rec.metric = std::string(to_string(inst.metric()));
  rec.strategy = "none";
  rec.neighborhood = "none";
  rec.top_k = 0;
  rec.initial_obj = sol.objective;
  rec.final_obj = sol.objective;
  rec.routes.push_back({0, sol.tour.order, sol.dwell.dwells, sol.tour.cost, sol.objective});
  rec.targets = inst.targets();
  rec.depots = {inst.location(sol.tour.depot)};
  return rec;
}

std::string record_to_json(const RunRecord& rec) {
  nlohmann::json j;
  j["v"] = 1;
  j["solver"] = rec.solver;
  j["instance"] = rec.instance_name;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["alpha_mode"] = std::string(to_string(rec.alpha_mode));
  j["alpha_input"] = rec.alpha_input;
  j["alpha"] = rec.alpha;
  j["tsp_star"] = rec.tsp_star;
  j["tau"] = rec.tau;
  j["metric"] = rec.metric;
  j["strategy"] = rec.strategy;
  j["neighborhood"] = rec.neighborhood;
  j["top_k"] = rec.top_k;
  j["restarts"] = rec.restarts;
  j["seed"] = rec.seed;
  j["initial_obj"] = rec.initial_obj;
  j["final_obj"] = rec.final_obj;
  j["pct_improve"] = rec.pct_improve;
  auto routes = nlohmann::json::array();
  for (const auto& r : rec.routes) {
    routes.push_back({{"vehicle", r.vehicle},
                      {"order", r.order},
                      {"dwell", r.dwell},
                      {"tour_cost", r.tour_cost},
                      {"objective", r.objective}});
  }
  j["routes"] = std::move(routes);
  j["targets"] = points_json(rec.targets);
  j["depots"] = points_json(rec.depots);
  j["wall_s"] = rec.wall_s;
  return j.dump(1);
}

RunRecord record_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("v").get<int>() != 1) throw SchemaError("unsupported run record version");
    RunRecord rec;
    rec.solver = j.at("solver").get<std::string>();
    rec.instance_name = j.at("instance").get<std::string>();
    rec.n = j.at("n").get<std::size_t>();
    rec.m = j.at("m").get<std::size_t>();
    rec.alpha_mode = alpha_mode_from_string(j.at("alpha_mode").get<std::string>());
    rec.alpha_input = j.at("alpha_input").get<double>();
    rec.alpha = j.at("alpha").get<double>();
    rec.tsp_star = j.at("tsp_star").get<double>();
    rec.tau = j.at("tau").get<double>();
    rec.metric = j.at("metric").get<std::string>();
    rec.strategy = j.at("strategy").get<std::string>();
    rec.neighborhood = j.at("neighborhood").get<std::string>();
    rec.top_k = j.at("top_k").get<int>();
    rec.restarts = j.at("restarts").get<std::size_t>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.initial_obj = j.at("initial_obj").get<double>();
    rec.final_obj = j.at("final_obj").get<double>();
    rec.pct_improve = j.at("pct_improve").get<double>();
    for (const auto& r : j.at("routes")) {
      RouteRecord rr;
      rr.vehicle = r.at("vehicle").get<std::size_t>();
      rr.order = r.at("order").get<std::vector<VertexId>>();
      rr.dwell = r.at("dwell").get<std::vector<double>>();
      rr.tour_cost = r.at("tour_cost").get<double>();
      rr.objective = r.at("objective").get<double>();
      if (rr.order.size() != rr.dwell.size()) throw SchemaError("route order/dwell length mismatch");
      rec.routes.push_back(std::move(rr));
    }
    rec.targets = points_from(j.at("targets"));
    rec.depots = points_from(j.at("depots"));
    rec.wall_s = j.at("wall_s").get<double>();
    for (const auto& r : rec.routes) {
      if (r.vehicle >= rec.depots.size()) throw SchemaError("route refers to a missing depot");
      for (VertexId t : r.order) {
        if (t >= rec.targets.size()) throw SchemaError("route refers to a missing target");
      }
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed run record: ") + e.what());
  }
}

std::string record_to_csv_row(const RunRecord& rec) {
  std::ostringstream os;
  os << csv_field(rec.instance_name) << ',' << rec.n << ',' << rec.m << ','
     << fmt_double(rec.alpha) << ',' << fmt_double(rec.tau) << ',' << csv_field(rec.strategy)
     << ',' << csv_field(rec.neighborhood) << ',' << rec.top_k << ',' << rec.seed << ','
     << fmt_double(rec.initial_obj) << ',' << fmt_double(rec.final_obj) << ','
     << fmt_double(rec.pct_improve) << ',' << fmt_double(rec.wall_s);
  return os.str();
}

RunRecord record_from_csv_row(std::string_view row) {
  const auto f = split_csv(row);
  if (f.size() != 13) {
    throw SchemaError("expected 13 CSV columns, got " + std::to_string(f.size()));
  }
  RunRecord rec;
  try {
    rec.instance_name = f[0];
    rec.n = std::stoull(f[1]);
    rec.m = std::stoull(f[2]);
    rec.alpha = std::stod(f[3]);
    rec.tau = std::stod(f[4]);
    rec.strategy = f[5];
    rec.neighborhood = f[6];
    rec.top_k = std::stoi(f[7]);
    rec.seed = std::stoull(f[8]);
    rec.initial_obj = std::stod(f[9]);
    rec.final_obj = std::stod(f[10]);
    rec.pct_improve = std::stod(f[11]);
    rec.wall_s = std::stod(f[12]);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("malformed CSV row: ") + e.what());
  }
  return rec;
}

std::string render_svg(const RunRecord& rec) {
  static constexpr std::array<const char*, 8> kColours = {
      "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  constexpr double kSize = 800.0;
  constexpr double kMargin = 40.0;
  constexpr double kLegend = 220.0;

  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  auto grow = [&](const Point& p) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const auto& p : rec.targets) grow(p);
  for (const auto& p : rec.depots) grow(p);
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
  // SVG y grows downwards
  auto sy = [&](double y) { return kSize - kMargin - (y - min_y) * scale; };

  double max_dwell = 0.0;
  for (const auto& r : rec.routes) {
    for (double d : r.dwell) max_dwell = std::max(max_dwell, d);
  }

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize + kLegend
     << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize + kLegend << ' ' << kSize
     << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kSize + kLegend << "\" height=\"" << kSize
     << "\" fill=\"white\"/>\n";

  for (const auto& r : rec.routes) {
    if (r.order.empty() || r.vehicle >= rec.depots.size()) continue;
    const char* colour = kColours[r.vehicle % kColours.size()];
    const Point& d = rec.depots[r.vehicle];
    os << "<polyline class=\"route\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"2\" points=\"" << sx(d.x) << ',' << sy(d.y);
    for (VertexId t : r.order) os << ' ' << sx(rec.targets[t].x) << ',' << sy(rec.targets[t].y);
    os << ' ' << sx(d.x) << ',' << sy(d.y) << "\"/>\n";
  }
  for (const auto& r : rec.routes) {
    const char* colour = kColours[r.vehicle % kColours.size()];
    for (std::size_t k = 0; k < r.order.size(); ++k) {
      const Point& p = rec.targets[r.order[k]];
      const double radius = 3.0 + (max_dwell > 0.0 ? 7.0 * r.dwell[k] / max_dwell : 0.0);
      os << "<circle class=\"target\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\""
         << radius << "\" fill=\"" << colour << "\" fill-opacity=\"0.6\"/>\n";
    }
  }
  for (std::size_t j = 0; j < rec.depots.size(); ++j) {
    const Point& d = rec.depots[j];
    os << "<rect class=\"depot\" x=\"" << sx(d.x) - 5 << "\" y=\"" << sy(d.y) - 5
       << "\" width=\"10\" height=\"10\" fill=\"black\"/>\n";
  }
  os << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
  double y = kMargin;
  os << "<text x=\"" << kSize << "\" y=\"" << y << "\">" << "total " << std::setprecision(6)
     << rec.final_obj << "</text>\n";
  os << std::setprecision(2);
  for (const auto& r : rec.routes) {
    y += 20.0;
    const char* colour = kColours[r.vehicle % kColours.size()];
    os << "<rect x=\"" << kSize << "\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\""
       << colour << "\"/>\n";
    os << "<text x=\"" << kSize + 18 << "\" y=\"" << y << "\">vehicle " << r.vehicle << ": "
       << std::setprecision(6) << r.objective << std::setprecision(2) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace dwellroute
