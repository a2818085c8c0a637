#include "dwellroute/dwell_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dwellroute/errors.hpp"
#include "dwellroute/infogain.hpp"

namespace dwellroute {

namespace {

double info_sum(std::span<const double> d, std::span<const double> taus) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) s += mutual_info(d[i], taus[i]);
  return s;
}

void gradient_into(std::span<const double> d, std::span<const double> taus, double alpha,
                   double info, std::vector<double>& grad) {
  grad.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    grad[i] = mutual_info_deriv(d[i], taus[i]) / info - alpha;
  }
}

double projected_norm(std::span<const double> d, std::span<const double> grad) {
  double r = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double gi = d[i] > 0.0 ? std::abs(grad[i]) : std::max(grad[i], 0.0);
    r = std::max(r, gi);
  }
  return r;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

[[noreturn]] void numeric_failure(const char* what, std::size_t iter, std::span<const double> d) {
  std::ostringstream os;
  os << "dwell optimiser: " << what << " at iteration " << iter << ", iterate = [";
  const std::size_t shown = std::min<std::size_t>(d.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? ", " : "") << d[i];
  if (shown < d.size()) os << ", ... (" << d.size() << " entries)";
  os << "]";
  throw NumericError(os.str());
}

void check_problem(std::span<const double> taus, double alpha) {
  if (taus.empty()) throw ContractError("optimize_dwell needs at least one target");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 0");
  for (double t : taus) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("every tau must be finite and > 0");
  }
}

}  // namespace

void DwellSolverConfig::validate() const {
  if (!(grad_tol > 0.0)) throw ContractError("grad_tol must be > 0");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw ContractError("backtrack_factor must lie in (0, 1)");
  }
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ContractError("armijo_c must lie in (0, 1)");
}

double log_objective(std::span<const double> dwells, std::span<const double> taus, double alpha) {
  if (dwells.size() != taus.size()) throw ContractError("dwells and taus differ in length");
  double total = 0.0;
  for (double d : dwells) total += d;
  const double info = info_sum(dwells, taus);
  if (!(info > 0.0)) return -std::numeric_limits<double>::infinity();
  return -alpha * total + std::log(info);
}

std::vector<double> log_objective_gradient(std::span<const double> dwells,
                                           std::span<const double> taus, double alpha) {
  if (dwells.size() != taus.size()) throw ContractError("dwells and taus differ in length");
  const double info = info_sum(dwells, taus);
  if (!(info > 0.0)) {
    throw DomainError("log-objective gradient undefined: all dwell times are zero");
  }
  std::vector<double> grad;
  gradient_into(dwells, taus, alpha, info, grad);
  return grad;
}

double kkt_residual(std::span<const double> dwells, std::span<const double> taus, double alpha) {
  const auto grad = log_objective_gradient(dwells, taus, alpha);
  return projected_norm(dwells, grad) / alpha;
}

DwellResult optimize_dwell(double tour_cost, std::span<const double> taus, double alpha,
                           const DwellSolverConfig& cfg, std::span<const double> warm_start) {
  check_problem(taus, alpha);
  cfg.validate();
  if (!(tour_cost >= 0.0)) throw DomainError("tour cost must be >= 0");
  const std::size_t n = taus.size();

  std::vector<double> d(taus.begin(), taus.end());
  if (cfg.init_mode == DwellInit::kWarmStart) {
    if (warm_start.size() != n) throw ContractError("warm start has the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if (warm_start[i] > 0.0 && std::isfinite(warm_start[i])) d[i] = warm_start[i];
    }
  }

  double info = info_sum(d, taus);
  double total = 0.0;
  for (double x : d) total += x;
  double g = -alpha * total + std::log(info);
  std::vector<double> grad;
  gradient_into(d, taus, alpha, info, grad);
  double residual = projected_norm(d, grad) / alpha;

  std::vector<double> trial(n), trial_grad, step(n);
  double max_tau = *std::max_element(taus.begin(), taus.end());
  double gmax = 0.0;
  for (double x : grad) gmax = std::max(gmax, std::abs(x));
  double t = gmax > 0.0 ? max_tau / gmax : 1.0;

  std::size_t iter = 0;
  bool converged = residual < cfg.grad_tol;
  if (cfg.on_iterate) cfg.on_iterate({0, d, g, residual});

  while (!converged && iter < cfg.max_iters) {
    bool accepted = false;
    double trial_g = 0.0;
    for (int bt = 0; bt < 200; ++bt) {
      double moved = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = std::max(0.0, d[i] + t * grad[i]);
        step[i] = trial[i] - d[i];
        moved = std::max(moved, std::abs(step[i]));
      }
      if (moved == 0.0) break;
      const double trial_info = info_sum(trial, taus);
      if (!(trial_info > 0.0)) {
        t *= cfg.backtrack_factor;
        continue;
      }
      double trial_total = 0.0;
      for (double x : trial) trial_total += x;
      trial_g = -alpha * trial_total + std::log(trial_info);
      if (!std::isfinite(trial_g)) numeric_failure("non-finite objective", iter, trial);
      gradient_into(trial, taus, alpha, trial_info, trial_grad);
      // Sufficient increase, or, once increments drop below rounding noise,
      // a nonnegative slope at the end of the segment: g is concave along
      // the segment, so that slope certifies g(trial) >= g(d).
      const bool armijo = trial_g >= g + cfg.armijo_c * dot(grad, step);
      const bool slope_ok = dot(trial_grad, step) >= 0.0;
      if (armijo || slope_ok) {
        accepted = true;
        info = trial_info;
        break;
      }
      t *= cfg.backtrack_factor;
    }
    if (!accepted) break;

    // Barzilai-Borwein step for the next iteration (y = change in gradient).
    double sy = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sy += step[i] * (trial_grad[i] - grad[i]);
      ss += step[i] * step[i];
    }
    d.swap(trial);
    grad.swap(trial_grad);
    g = trial_g;
    ++iter;
    for (double x : d) {
      if (!std::isfinite(x)) numeric_failure("non-finite dwell", iter, d);
    }
    residual = projected_norm(d, grad) / alpha;
    if (cfg.on_iterate) cfg.on_iterate({iter, d, g, residual});
    converged = residual < cfg.grad_tol;
    if (sy < 0.0) {
      t = std::clamp(ss / -sy, 1e-12, 1e15);
    } else {
      t = std::min(t * 2.0, 1e15);
    }
  }

  DwellResult res;
  res.iterations = iter;
  res.converged = converged;
  res.first_order_residual = residual;
  res.objective = vehicle_objective(tour_cost, d, taus, alpha);
  res.dwells = std::move(d);
  return res;
}

double optimize_dwell_symmetric(std::size_t n, double tau, double alpha) {
  if (n == 0) throw ContractError("optimize_dwell_symmetric needs n >= 1");
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  if (!(alpha > 0.0)) throw DomainError("alpha must be > 0");
  const double rate = alpha * static_cast<double>(n);
  // phi(d) = -alpha n d + log(n I(d)); phi' = I'/I - alpha n is decreasing and
  // tends to +inf as d -> 0, so the maximiser is interior.
  auto phi = [&](double d) { return -rate * d + std::log(static_cast<double>(n) * mutual_info(d, tau)); };
  auto slope = [&](double d) { return mutual_info_deriv(d, tau) / mutual_info(d, tau) - rate; };

  double lo = 0.0;
  double hi = tau;
  while (slope(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw NumericError("symmetric dwell bracket diverged");
  }

  // Golden-section while function values still resolve the bracket.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = phi(std::max(c, std::numeric_limits<double>::min()));
  double fe = phi(e);
  while (b - a > 1e-5 * (1.0 + b)) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = phi(std::max(c, std::numeric_limits<double>::min()));
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = phi(e);
    }
  }
  // Near a flat maximum phi differences fall below rounding; the derivative
  // sign is still exact, so finish by bisection on phi'.
  double blo = std::max(lo, a - (b - a));
  double bhi = std::min(hi, b + (b - a));
  if (blo > 0.0 && slope(blo) < 0.0) blo = lo;
  if (slope(bhi) > 0.0) bhi = hi;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (blo + bhi);
    if (mid <= blo || mid >= bhi || bhi - blo <= 1e-10 * 1e-6 * std::max(1.0, bhi)) break;
    if (mid > 0.0 && slope(mid) > 0.0) {
      blo = mid;
    } else {
      bhi = mid;
    }
  }
  return 0.5 * (blo + bhi);
}

}  // namespace dwellroute
