#pragma once

#include <span>
#include <vector>

namespace dwellroute {

/// Discount rate and per-target sensitivities. The prior probability that a
/// point of interest is a true target is fixed at 1/2.
struct InfoParams {
  double alpha = 1.0;
  std::vector<double> tau;

  static constexpr double kPrior = 0.5;

  /// Throws DomainError unless alpha > 0 and every tau > 0.
  void validate() const;
};

/// Probability of a correct classification after dwelling `d`:
/// P(d) = 1 - exp(-sqrt(d / tau)) / 2, in [0.5, 1).
double classification_prob(double d, double tau);

/// Mutual information (nats) between truth and operator label,
/// I = P log P + (1 - P) log(1 - P) + log 2. Zero at d = 0, tends to log 2.
double mutual_info(double d, double tau);

/// dI/dd. At d = 0 the finite right limit 1 / (2 tau) is returned.
double mutual_info_deriv(double d, double tau);

/// d^2 I / dd^2 for d > 0.
double mutual_info_second_deriv(double d, double tau);

/// exp(-alpha R) * I(d).
double discounted_gain(double d, double revisit, double tau, double alpha);

/// exp(-alpha (tour_cost + sum d)) * sum I_j(d_j); an empty target list scores 0.
double vehicle_objective(double tour_cost, std::span<const double> dwells,
                         std::span<const double> taus, double alpha);

double total_objective(std::span<const double> per_vehicle);

}  // namespace dwellroute
