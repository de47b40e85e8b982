#include <cmath>
#include <limits>

#include "doctest.h"
#include "hv/radial.hpp"

using namespace hv;

namespace {
double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_SUITE("radial") {

TEST_CASE("coth_safe") {
  CHECK(rel(coth_safe(1.0), std::cosh(1.0) / std::sinh(1.0)) < 1e-15);
  // series branch: coth(x) ~ 1/x + x/3
  const double x = 1e-5;
  CHECK(rel(coth_safe(x), 1.0 / x + x / 3.0) < 1e-14);
}

TEST_CASE("bump derivatives are consistent") {
  const SmoothRadialFunction u = bump(1.5, 4);
  CHECK(rel(u.f(0.0), 1.0) < 1e-15);
  CHECK(u.f(1.5) == 0.0);
  CHECK(u.df(0.0) == 0.0);
  const double h = 1e-6;
  for (double r : {0.2, 0.7, 1.2}) {
    const double fd1 = (u.f(r + h) - u.f(r - h)) / (2 * h);
    const double fd2 = (u.f(r + h) - 2 * u.f(r) + u.f(r - h)) / (h * h);
    CHECK(rel(u.df(r), fd1) < 1e-8);
    CHECK(rel(u.ddf(r), fd2) < 1e-3);
  }
}

TEST_CASE("plateau shape") {
  const SmoothRadialFunction u = plateau(1.0, 2.0);
  CHECK(u.f(0.5) == 1.0);
  CHECK(u.f(1.0) == 1.0);
  CHECK(u.f(2.0) == 0.0);
  CHECK(u.df(0.5) == 0.0);
  // midpoint of the heptic smoothstep: S(1/2) = 1 - (35/16 - 84/32 + 70/64 - 20/128)
  const double s = 0.5;
  const double S = 35 * std::pow(s, 4) - 84 * std::pow(s, 5) +
                   70 * std::pow(s, 6) - 20 * std::pow(s, 7);
  CHECK(rel(u.f(1.5), 1.0 - S) < 1e-14);
  // C^3 join: derivative vanishes at both ends of the ramp
  CHECK(std::abs(u.df(1.0 + 1e-9)) < 1e-5);
  CHECK(std::abs(u.df(2.0 - 1e-9)) < 1e-5);
}

TEST_CASE("laplacian of a constant-like profile vanishes on the plateau") {
  const SpaceParams h3 = SpaceParams::make(3);
  const SmoothRadialFunction u = plateau(1.0, 2.0);
  const SmoothRadialFunction lap = laplacian_radial(u, h3);
  CHECK(std::abs(lap.f(0.3)) < 1e-12);
  CHECK(std::abs(lap.f(0.9)) < 1e-12);
}

TEST_CASE("laplacian closed form: cosh on H^2") {
  // u = cosh(rho): u'' + coth(rho) u' = cosh + cosh = 2 cosh
  const SpaceParams h2 = SpaceParams::make(2);
  SmoothRadialFunction u;
  u.f = [](double r) { return std::cosh(r); };
  u.df = [](double r) { return std::sinh(r); };
  u.ddf = [](double r) { return std::cosh(r); };
  u.support_radius = std::numeric_limits<double>::infinity();
  const SmoothRadialFunction lap = laplacian_radial(u, h2);
  for (double r : {0.3, 1.0, 2.5}) CHECK(rel(lap.f(r), 2.0 * std::cosh(r)) < 1e-12);
  // origin limit n u''(0) = 2
  CHECK(rel(lap.f(0.0), 2.0) < 1e-10);
}

TEST_CASE("finite-difference derivatives of the laplacian converge") {
  const SpaceParams h3 = SpaceParams::make(3);
  const SmoothRadialFunction lap = laplacian_radial(bump(2.0, 5), h3);
  // lap.df should be the derivative of lap.f to FD accuracy
  const double h = 1e-5;
  for (double r : {0.4, 1.0, 1.6}) {
    const double fd = (lap.f(r + h) - lap.f(r - h)) / (2 * h);
    CHECK(rel(lap.df(r), fd) < 1e-4);
  }
}

TEST_CASE("nabla_m_norm orders") {
  const SpaceParams h3 = SpaceParams::make(3);
  const SmoothRadialFunction u = bump(1.0, 4);
  auto g1 = nabla_m_norm(u, 1, h3);
  auto g2 = nabla_m_norm(u, 2, h3);
  const SmoothRadialFunction lap = laplacian_radial(u, h3);
  for (double r : {0.2, 0.5, 0.8}) {
    CHECK(rel(g1(r), std::abs(u.df(r))) < 1e-14);
    CHECK(rel(g2(r), std::abs(lap.f(r))) < 1e-12);
  }
  // m = 3: |(Delta u)'|
  auto g3 = nabla_m_norm(u, 3, h3);
  for (double r : {0.3, 0.6}) CHECK(rel(g3(r), std::abs(lap.df(r))) < 1e-10);
}

TEST_CASE("ball-model cross check of the laplacian") {
  // U(x) = u(rho(|x|)) on the Poincare ball for H^2, rho = ln((1+r)/(1-r)),
  // conformal factor lambda(x) = 2/(1-|x|^2):
  // Delta_g U = lambda^{-2} Delta_euclidean U.
  const SpaceParams h2 = SpaceParams::make(2);
  const SmoothRadialFunction u = bump(1.5, 5);
  const SmoothRadialFunction lap = laplacian_radial(u, h2);
  auto U = [&](double x, double y) {
    const double r = std::hypot(x, y);
    if (r >= 1.0) return 0.0;
    return u.f(std::log((1.0 + r) / (1.0 - r)));
  };
  const double h = 1e-4;
  for (double x0 : {0.1, 0.3, 0.5}) {
    const double y0 = 0.05;
    const double lapE = (U(x0 + h, y0) + U(x0 - h, y0) + U(x0, y0 + h) +
                         U(x0, y0 - h) - 4.0 * U(x0, y0)) /
                        (h * h);
    const double r = std::hypot(x0, y0);
    const double lam = 2.0 / (1.0 - r * r);
    const double rho = std::log((1.0 + r) / (1.0 - r));
    CHECK(rel(lapE / (lam * lam), lap.f(rho)) < 1e-4);
  }
}

}  // TEST_SUITE
