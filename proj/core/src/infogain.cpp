#include "dwellroute/infogain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dwellroute/errors.hpp"

namespace dwellroute {

namespace {

void check_args(double d, double tau) {
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw DomainError("dwell time must be finite and >= 0, got " + std::to_string(d));
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("tau must be finite and > 0, got " + std::to_string(tau));
  }
}

// log(2P) = log(2 - e^{-s}) = log1p(1 - e^{-s}), accurate for small and large s.
double log_two_p(double s) { return std::log1p(-std::expm1(-s)); }

}  // namespace

void InfoParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > 0");
  for (double t : tau) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("every tau must be finite and > 0");
  }
}

double classification_prob(double d, double tau) {
  check_args(d, tau);
  return 1.0 - 0.5 * std::exp(-std::sqrt(d / tau));
}

double mutual_info(double d, double tau) {
  check_args(d, tau);
  if (d == 0.0) return 0.0;
  const double s = std::sqrt(d / tau);
  const double e = std::exp(-s);
  const double p = 1.0 - 0.5 * e;
  // P log P + (1-P) log(1-P) + log 2 == P log(2P) + (1-P) log(2(1-P)),
  // and 2(1-P) = e^{-s}, so the second term is -(e/2) s.
  const double value = p * log_two_p(s) - 0.5 * e * s;
  return value < 0.0 ? 0.0 : value;
}

double mutual_info_deriv(double d, double tau) {
  check_args(d, tau);
  if (d == 0.0) return 0.5 / tau;
  const double s = std::sqrt(d / tau);
  const double e = std::exp(-s);
  // P' = e / (4 s tau), log(P / (1-P)) = log(2P) + s
  const double logit = log_two_p(s) + s;
  return e * logit / (4.0 * s * tau);
}

double mutual_info_second_deriv(double d, double tau) {
  check_args(d, tau);
  if (d == 0.0) throw DomainError("second derivative is unbounded at d = 0");
  const double s = std::sqrt(d / tau);
  const double e = std::exp(-s);
  const double p = 1.0 - 0.5 * e;
  const double logit = log_two_p(s) + s;
  const double t2 = tau * tau;
  return -e * (s + 1.0) * logit / (8.0 * t2 * s * s * s) + e / (8.0 * s * s * t2 * p);
}

double discounted_gain(double d, double revisit, double tau, double alpha) {
  if (!(revisit >= 0.0)) throw DomainError("revisit time must be >= 0");
  if (!(alpha >= 0.0)) throw DomainError("alpha must be >= 0");
  return std::exp(-alpha * revisit) * mutual_info(d, tau);
}

double vehicle_objective(double tour_cost, std::span<const double> dwells,
                         std::span<const double> taus, double alpha) {
  if (dwells.size() != taus.size()) {
    throw ContractError("dwell vector has " + std::to_string(dwells.size()) +
                        " entries but there are " + std::to_string(taus.size()) + " taus");
  }
  if (!(tour_cost >= 0.0)) throw DomainError("tour cost must be >= 0");
  if (dwells.empty()) return 0.0;
  double total_dwell = 0.0;
  double info = 0.0;
  for (std::size_t i = 0; i < dwells.size(); ++i) {
    total_dwell += dwells[i];
    info += mutual_info(dwells[i], taus[i]);
  }
  return std::exp(-alpha * (tour_cost + total_dwell)) * info;
}

double total_objective(std::span<const double> per_vehicle) {
  double sum = 0.0;
  for (double v : per_vehicle) sum += v;
  return sum;
}

}  // namespace dwellroute
