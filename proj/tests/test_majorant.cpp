#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hv/geometry.hpp"
#include "hv/majorant.hpp"
#include "hv/quadrature.hpp"

using namespace hv;

namespace {
double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

double oracle_v(const Profile& f, const SpaceParams& sp, double t) {
  // v(t) = int_t^inf s f(s) / K(s)^2 ds by direct decade integration;
  // integrate_decades expands around the anchor window, so clamp below t
  return integrate_decades(
      [&](double s) {
        if (s < t) return 0.0;
        const double lk = log_surface_factor(sp, s);
        return s * f(s) * std::exp(-2.0 * lk);
      },
      t, 1e12, 1e-11);
}
}  // namespace

TEST_SUITE("majorant") {

TEST_CASE("zero input, zero output") {
  const SpaceParams h3 = SpaceParams::make(3);
  const MajorantResult r = majorant_v(Profile::zero(), h3);
  CHECK(r.v(1.0) == 0.0);
}

TEST_CASE("non-integrable tail is rejected") {
  const SpaceParams h3 = SpaceParams::make(3);
  Profile c = Profile::constant(1.0);
  c.nonincreasing = true;
  // s * 1 / K^2 ~ 1/s at infinity: divergent
  CHECK_THROWS_AS(majorant_v(c, h3), std::domain_error);
}

TEST_CASE("step profile against the quadrature oracle") {
  const SpaceParams h3 = SpaceParams::make(3);
  const Profile f = Profile::step({0.5, 2.0, 10.0}, {3.0, 1.0, 0.2});
  const MajorantResult r = majorant_v(f, h3);
  for (double t : {1e-4, 0.05, 0.7, 3.0, 9.0, 50.0})
    CHECK(rel(r.v(t), oracle_v(f, h3, t)) < 1e-6);
  CHECK(r.v(1e5) == 0.0);  // f vanished long before
}

TEST_CASE("exact derivative identity") {
  const SpaceParams h2 = SpaceParams::make(2);
  const Profile f = Profile::step({1.0, 4.0}, {2.0, 0.5});
  const MajorantResult r = majorant_v(f, h2);
  const double h = 1e-4;
  for (double t : {0.3, 2.0}) {
    const double fd = (r.v(t + h) - r.v(t - h)) / (2 * h);
    CHECK(rel(r.vprime(t), fd) < 1e-3);  // FD of the tabulated v is coarse
    const double expect =
        -t * f(t) * std::exp(-2.0 * log_surface_factor(h2, t));
    CHECK(rel(r.vprime(t), expect) < 1e-12);
  }
}

TEST_CASE("linearity in the input") {
  const SpaceParams h3 = SpaceParams::make(3);
  const Profile f = Profile::step({1.0, 3.0}, {2.0, 1.0});
  const MajorantResult r1 = majorant_v(f, h3);
  const MajorantResult r2 = majorant_v(scaled(f, 7.0), h3);
  for (double t : {0.2, 1.5, 2.9}) CHECK(rel(r2.v(t), 7.0 * r1.v(t)) < 1e-9);
}

TEST_CASE("power tail decays with the expected exponent") {
  const SpaceParams h3 = SpaceParams::make(3);
  // f = min(1, t^{-1/2}): tail integrand ~ s^{1/2}/s^2 -> v ~ t^{-1/2}
  Profile f;
  f.breaks = {1.0};
  f.pieces.resize(2);
  f.pieces[0].terms = {{1.0, 0.0, 0}};
  f.pieces[1].terms = {{1.0, -0.5, 0}};
  f.nonincreasing = true;
  const MajorantResult r = majorant_v(f, h3);
  const double slope =
      std::log(r.v(4e3) / r.v(1e3)) / std::log(4.0);
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.05));
}

TEST_CASE("apply_T preserves monotonicity and positivity") {
  const SpaceParams h3 = SpaceParams::make(3);
  const Profile f = Profile::step({2.0}, {1.0});
  const Profile Tv = apply_T(f, h3);
  CHECK(Tv.nonincreasing);
  double prev = Tv(1e-4);
  CHECK(prev > 0.0);
  for (double t : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
    const double cur = Tv(t);
    CHECK(cur <= prev * (1.0 + 1e-9));
    prev = cur;
  }
}

}  // TEST_SUITE
