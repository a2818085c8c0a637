#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dwellroute {

enum class DwellInit {
  kTau,        // d_i = tau_i
  kWarmStart,  // caller-supplied dwells; non-positive entries fall back to tau_i
};

struct DwellIterate {
  std::size_t iteration = 0;
  std::span<const double> dwells;
  double log_objective = 0.0;
  double residual = 0.0;
};

struct DwellSolverConfig {
  /// Convergence threshold on the projected gradient of the log objective,
  /// measured in units of alpha (so the test is dimensionless).
  double grad_tol = 1e-8;
  std::size_t max_iters = 10000;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  DwellInit init_mode = DwellInit::kTau;
  /// Called once per accepted iterate, including the starting point.
  std::function<void(const DwellIterate&)> on_iterate;

  void validate() const;
};

struct DwellResult {
  std::vector<double> dwells;
  /// exp(-alpha (tour_cost + sum d)) * sum I_i(d_i)
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Projected gradient infinity norm of the log objective divided by alpha.
  double first_order_residual = 0.0;
};

/// Maximises exp(-alpha sum d) * sum I_i(d_i) over d >= 0 by projected
/// gradient ascent on its logarithm. `tour_cost` only scales the reported
/// objective; it does not move the maximiser.
DwellResult optimize_dwell(double tour_cost, std::span<const double> taus, double alpha,
                           const DwellSolverConfig& cfg = {},
                           std::span<const double> warm_start = {});

/// -alpha sum d + log(sum I_i(d_i)).
double log_objective(std::span<const double> dwells, std::span<const double> taus, double alpha);

/// Component k: I_k'(d_k) / sum_j I_j(d_j) - alpha. Throws DomainError when
/// every dwell is zero (the logarithm is undefined there).
std::vector<double> log_objective_gradient(std::span<const double> dwells,
                                           std::span<const double> taus, double alpha);

/// Dimensionless KKT violation: max over i of |I_i'(d_i) / (alpha S) - 1| for
/// d_i > 0 and max(0, I_i'(0+) / (alpha S) - 1) for d_i = 0, S = sum I_j(d_j).
double kkt_residual(std::span<const double> dwells, std::span<const double> taus, double alpha);

/// Scalar oracle for n identical targets: argmax over d of
/// exp(-alpha n d) n I(d), found by bracketing + golden-section search and a
/// final derivative-sign bisection.
double optimize_dwell_symmetric(std::size_t n, double tau, double alpha);

}  // namespace dwellroute
