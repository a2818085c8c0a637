#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dwellroute/errors.hpp"
#include "dwellroute/infogain.hpp"

using namespace dwellroute;

namespace {

// log 2 - I(d), evaluated independently in extended precision. Written in terms of
// q = 1 - P so that it keeps full relative accuracy when I is close to log 2.
long double info_gap(long double d, long double tau) {
  const long double s = std::sqrt(d / tau);
  const long double q = 0.5L * std::exp(-s);
  return -(1.0L - q) * std::log1p(-q) + q * (s + std::log(2.0L));
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("classification_prob values and limits") {
  CHECK(classification_prob(0.0, 1.0) == 0.5);
  CHECK(classification_prob(2.0, 2.0) == doctest::Approx(0.816060279414279).epsilon(1e-14));
  CHECK(classification_prob(1e6, 1.0) > 1.0 - 1e-6);
  // 1 - P underflows once sqrt(d / tau) exceeds about 37
  CHECK(classification_prob(1e6, 1.0) <= 1.0);
  CHECK(classification_prob(900.0, 1.0) < 1.0);
  CHECK_THROWS_AS(classification_prob(-1e-9, 1.0), DomainError);
  CHECK_THROWS_AS(classification_prob(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(classification_prob(1.0, -2.0), DomainError);
}

TEST_CASE("mutual_info values and limits") {
  CHECK(mutual_info(0.0, 0.5) == 0.0);
  CHECK(std::abs(mutual_info(1e6, 1.0) - std::numbers::ln2) < 1e-5);
  CHECK(mutual_info(1e6, 1.0) <= std::numbers::ln2);
  CHECK(mutual_info(900.0, 1.0) < std::numbers::ln2);
  // reference value from a 40-digit evaluation
  CHECK(mutual_info(11.37, 0.5) == doctest::Approx(0.66571988953668482).epsilon(1e-13));
  CHECK_THROWS_AS(mutual_info(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(mutual_info(1.0, 0.0), DomainError);
}

TEST_CASE("mutual_info agrees with the extended-precision oracle") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logd(-6, 4), logt(-1, 1);
  for (int k = 0; k < 10000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    const double d = tau * std::pow(10.0, logd(rng));
    const double expect = static_cast<double>(std::log(2.0L) - info_gap(d, tau));
    REQUIRE(std::abs(mutual_info(d, tau) - expect) <= 1e-15 + 1e-13 * expect);
  }
}

TEST_CASE("bounds and monotonicity on random samples") {
  std::mt19937_64 rng(2);
  // upper end keeps 1 - P representable, so the strict bounds are meaningful
  std::uniform_real_distribution<double> logd(-4, 2.95), logt(-1, 1);
  for (int k = 0; k < 10000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    double d1 = tau * std::pow(10.0, logd(rng));
    double d2 = tau * std::pow(10.0, logd(rng));
    if (d1 > d2) std::swap(d1, d2);
    const double p = classification_prob(d1, tau);
    REQUIRE(p >= 0.5);
    REQUIRE(p < 1.0);
    const double i1 = mutual_info(d1, tau), i2 = mutual_info(d2, tau);
    REQUIRE(i1 >= 0.0);
    REQUIRE(i1 < std::numbers::ln2);
    REQUIRE(i1 <= i2);
    REQUIRE(classification_prob(d1, tau) <= classification_prob(d2, tau));
    REQUIRE(mutual_info_deriv(d1, tau) >= 0.0);
  }
}

TEST_CASE("derivative matches central differences") {
  // the example point from the documentation
  {
    const double d = 3.0, tau = 0.5, h = 1e-6;
    const double fd = (mutual_info(d + h, tau) - mutual_info(d - h, tau)) / (2 * h);
    CHECK(rel_err(mutual_info_deriv(d, tau), fd) < 1e-6);
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> logd(-3, 3), logt(-1, 1);
  for (int k = 0; k < 1000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    const long double d = tau * std::pow(10.0, logd(rng));
    const long double h = 1e-5L * d;
    const long double fd = -(info_gap(d + h, tau) - info_gap(d - h, tau)) / (2 * h);
    REQUIRE(rel_err(mutual_info_deriv(static_cast<double>(d), tau), static_cast<double>(fd)) < 1e-6);
  }
}

TEST_CASE("second derivative matches differences of the first") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> logd(-3, 2), logt(-1, 1);
  for (int k = 0; k < 1000; ++k) {
    const double tau = std::pow(10.0, logt(rng));
    const double d = tau * std::pow(10.0, logd(rng));
    const double h = 1e-5 * d;
    const double fd = (mutual_info_deriv(d + h, tau) - mutual_info_deriv(d - h, tau)) / (2 * h);
    const double an = mutual_info_second_deriv(d, tau);
    REQUIRE(an <= 0.0);
    REQUIRE(rel_err(an, fd) < 1e-5);
  }
  CHECK_THROWS_AS(mutual_info_second_deriv(0.0, 1.0), DomainError);
}

TEST_CASE("derivative right limit at zero") {
  CHECK(mutual_info_deriv(0.0, 1.0) == 0.5);
  CHECK(mutual_info_deriv(0.0, 0.25) == 2.0);
  CHECK(mutual_info_deriv(1e-8, 1.0) == doctest::Approx(0.5).epsilon(0.01));
  // series: P ~ 1/2 + s/2, I ~ s^2/2 = d/(2 tau)
  CHECK(mutual_info(1e-10, 2.0) == doctest::Approx(1e-10 / 4.0).epsilon(1e-4));
}

TEST_CASE("diminishing returns on a log grid") {
  for (double tau : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    double prev = mutual_info_deriv(1e-3 * tau, tau);
    for (double e = -3.0; e <= 3.0 + 1e-12; e += 0.01) {
      const double cur = mutual_info_deriv(std::pow(10.0, e) * tau, tau);
      REQUIRE(cur <= prev + 1e-10);
      prev = cur;
    }
  }
}

TEST_CASE("log objective is concave along random segments") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dwell(0.01, 20.0), tau_d(0.2, 3.0);
  auto g = [](const std::vector<double>& d, const std::vector<double>& t, double alpha) {
    double sum_d = 0.0, sum_i = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      sum_d += d[i];
      sum_i += mutual_info(d[i], t[i]);
    }
    return -alpha * sum_d + std::log(sum_i);
  };
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 1 + k % 7;
    std::vector<double> a(n), b(n), t(n), mid(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = dwell(rng);
      b[i] = dwell(rng);
      t[i] = tau_d(rng);
      mid[i] = 0.5 * (a[i] + b[i]);
    }
    const double alpha = 1e-3;
    REQUIRE(g(mid, t, alpha) >= 0.5 * (g(a, t, alpha) + g(b, t, alpha)) - 1e-10);
  }
}

TEST_CASE("discounted gain") {
  CHECK(discounted_gain(4.0, 0.0, 1.0, 3.0) == mutual_info(4.0, 1.0));
  CHECK(discounted_gain(0.0, 17.0, 1.0, 0.1) == 0.0);
  CHECK(discounted_gain(2.0, std::numbers::ln2, 1.0, 1.0) ==
        doctest::Approx(mutual_info(2.0, 1.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(discounted_gain(1.0, -1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("vehicle and total objectives") {
  CHECK(vehicle_objective(12.0, {}, {}, 0.5) == 0.0);
  const std::vector<double> one{1.0}, tau1{1.0};
  CHECK(vehicle_objective(0.0, one, tau1, 1e-12) == doctest::Approx(mutual_info(1.0, 1.0)).epsilon(1e-10));
  const std::vector<double> d{1.0, 1.0}, t{1.0, 1.0};
  CHECK(vehicle_objective(0.0, d, t, 1.0) ==
        doctest::Approx(std::exp(-2.0) * 2 * mutual_info(1.0, 1.0)).epsilon(1e-14));
  CHECK(vehicle_objective(3.0, d, t, 0.5) ==
        doctest::Approx(std::exp(-0.5 * 5.0) * 2 * mutual_info(1.0, 1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(vehicle_objective(0.0, d, tau1, 1.0), ContractError);

  CHECK(total_objective({}) == 0.0);
  const std::vector<double> a{2.5};
  CHECK(total_objective(a) == 2.5);
  const std::vector<double> ab{1.5, 2.5};
  CHECK(total_objective(ab) == 4.0);
}

TEST_CASE("InfoParams validation") {
  InfoParams p;
  p.alpha = 0.1;
  p.tau = {1.0, 2.0};
  CHECK_NOTHROW(p.validate());
  p.tau.push_back(0.0);
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.tau = {1.0};
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK(InfoParams::kPrior == 0.5);
}
