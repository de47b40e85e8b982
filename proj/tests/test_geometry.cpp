#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hv/geometry.hpp"

using namespace hv;

namespace {
double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("unit ball volumes") {
  CHECK(rel(unit_ball_volume(2), M_PI) < 1e-14);
  CHECK(rel(unit_ball_volume(3), 4.0 * M_PI / 3.0) < 1e-14);
  CHECK(rel(unit_ball_volume(4), M_PI * M_PI / 2.0) < 1e-14);
  CHECK(rel(unit_ball_volume(1), 2.0) < 1e-14);
  CHECK_THROWS_AS(unit_ball_volume(0), std::domain_error);
}

TEST_CASE("ball volume closed forms") {
  const SpaceParams h2 = SpaceParams::make(2);
  const SpaceParams h3 = SpaceParams::make(3);
  CHECK(ball_volume(h2, 0.0) == 0.0);
  CHECK(ball_volume(h3, 0.0) == 0.0);
  for (double rho : {0.01, 0.5, 1.3, 4.0, 20.0}) {
    // cancellation-free closed form for n = 2: 4 pi sinh^2(rho/2)
    const double s = std::sinh(0.5 * rho);
    CHECK(rel(ball_volume(h2, rho), 4.0 * M_PI * s * s) < 1e-13);
    // sinh(2 rho) - 2 rho cancels at small rho; modest tolerance there
    CHECK(rel(ball_volume(h3, rho), M_PI * (std::sinh(2 * rho) - 2 * rho)) <
          1e-10);
  }
  CHECK(rel(ball_volume(h2, std::acosh(2.0)), 2.0 * M_PI) < 1e-13);
  CHECK_THROWS_AS(ball_volume(h2, -1.0), std::domain_error);
}

TEST_CASE("quadrature path agrees with the binomial expansion oracle") {
  for (int n : {4, 5, 6, 7, 8}) {
    const SpaceParams sp = SpaceParams::make(n);
    for (double rho : {1.5, 3.0, 8.0}) {
      const double via_lib = ball_volume(sp, rho);
      const double oracle =
          n * sp.sigma_n * detail::volume_integral_expansion(n, rho);
      CHECK(rel(via_lib, oracle) < 1e-12);
    }
  }
}

TEST_CASE("inverse volume") {
  const SpaceParams h2 = SpaceParams::make(2);
  const SpaceParams h3 = SpaceParams::make(3);
  CHECK(inverse_volume(h2, 0.0) == 0.0);
  CHECK(rel(inverse_volume(h2, 2.0 * M_PI), std::acosh(2.0)) < 1e-12);
  CHECK(rel(inverse_volume(h3, M_PI * (std::sinh(2.0) - 2.0)), 1.0) < 1e-12);
  CHECK_THROWS_AS(inverse_volume(h2, -1.0), std::domain_error);
}

TEST_CASE("round trip across dimensions") {
  for (int n = 2; n <= 10; ++n) {
    const SpaceParams sp = SpaceParams::make(n);
    for (double lt = -9.0; lt <= 9.0; lt += 1.5) {
      const double t = std::pow(10.0, lt);
      const double back = ball_volume(sp, inverse_volume(sp, t));
      CHECK(rel(back, t) < 1e-11);
    }
  }
}

TEST_CASE("log_sinh_F") {
  const SpaceParams h2 = SpaceParams::make(2);
  CHECK(rel(log_sinh_F(h2, 2.0 * M_PI), 0.5 * std::log(3.0)) < 1e-12);
  // small-t: F ~ (t/sigma_n)^{1/n}
  const SpaceParams h4 = SpaceParams::make(4);
  const double t_small = 1e-10;
  CHECK(rel(log_sinh_F(h4, t_small),
            std::log(t_small / h4.sigma_n) / 4.0) < 1e-3);
  // large-t: ln sinh F -> ln t + ln((n-1)/(n sigma_n))
  const double t_big = 1e12;
  CHECK(rel(log_sinh_F(h2, t_big),
            std::log(t_big) + std::log(1.0 / (2.0 * h2.sigma_n))) < 1e-6);
  CHECK_THROWS_AS(log_sinh_F(h2, 0.0), std::domain_error);
}

TEST_CASE("phi values and limit") {
  const SpaceParams h2 = SpaceParams::make(2);
  CHECK(rel(phi(h2, 2.0 * M_PI), 2.0 * M_PI / std::sqrt(3.0)) < 1e-12);
  // phi ~ sigma_n^{(n-1)/n} t^{1/n} near zero
  const SpaceParams h3 = SpaceParams::make(3);
  const double t0 = 1e-12;
  CHECK(rel(phi(h3, t0),
            std::pow(h3.sigma_n, 2.0 / 3.0) * std::pow(t0, 1.0 / 3.0)) <
        1e-4);
  // limit n sigma_n / (n-1) = 2 pi for n = 2
  CHECK(rel(phi(h2, 1e14), 2.0 * M_PI) < 1e-6);
  // consistency with log_sinh_F
  for (double t : {1e-6, 1.0, 1e6}) {
    const double direct = t * std::exp(-(h3.n - 1) * log_sinh_F(h3, t));
    CHECK(rel(phi(h3, t), direct) < 1e-13);
  }
}

TEST_CASE("eta") {
  const SpaceParams h2 = SpaceParams::make(2);
  for (double rho : {0.3, 1.0, 5.0})
    CHECK(rel(eta(h2, rho), std::tanh(0.5 * rho)) < 1e-12);
  CHECK(rel(eta(h2, 40.0), 1.0) < 1e-10);
  const SpaceParams h5 = SpaceParams::make(5);
  CHECK(rel(eta(h5, 1e-4), 1e-4 / 5.0) < 1e-6);
  CHECK(rel(eta(h5, 50.0), 0.25) < 1e-9);
  CHECK_THROWS_AS(eta(h2, 0.0), std::domain_error);
}

TEST_CASE("surface factor is the volume derivative") {
  const SpaceParams h3 = SpaceParams::make(3);
  for (double t : {0.1, 3.0, 1e4}) {
    const double rho = inverse_volume(h3, t);
    const double deriv =
        3.0 * h3.sigma_n * std::pow(std::sinh(rho), 2);
    CHECK(rel(surface_factor(h3, t), deriv) < 1e-11);
  }
}

TEST_CASE("overflow-safe large arguments") {
  const SpaceParams h10 = SpaceParams::make(10);
  const double ls = log_volume_integral(h10, 200.0);
  CHECK(std::isfinite(ls));
  // leading asymptotic 2^{1-n} e^{(n-1)rho}/(n-1)
  const double lead = 9.0 * 200.0 - 9.0 * M_LN2 - std::log(9.0);
  CHECK(rel(ls, lead) < 1e-3);
  CHECK(std::isfinite(log_sinh(1000.0)));
  CHECK(rel(log_sinh(1000.0), 1000.0 - M_LN2) < 1e-15);
}

}  // TEST_SUITE
