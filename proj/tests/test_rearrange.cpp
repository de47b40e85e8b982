#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hv/geometry.hpp"
#include "hv/rearrange.hpp"

using namespace hv;

namespace {
double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_SUITE("rearrange") {

TEST_CASE("indicator of a ball rearranges to an indicator in volume") {
  const SpaceParams h3 = SpaceParams::make(3);
  const auto w = WeightedRadialFunction::step(h3, {1.5}, {2.0});
  const double V = ball_volume(h3, 1.5);
  CHECK(rel(distribution(w, 1.0), V) < 1e-13);
  CHECK(distribution(w, 2.5) == 0.0);
  const Profile u = rearrange(w);
  CHECK(u(0.5 * V) == 2.0);
  CHECK(u(1.001 * V) == 0.0);
  CHECK(u.nonincreasing);
}

TEST_CASE("annulus keeps its measure") {
  const SpaceParams h2 = SpaceParams::make(2);
  // value 3 on the annulus 1 <= rho < 2, zero inside and outside
  const auto w = WeightedRadialFunction::step(h2, {1.0, 2.0}, {0.0, 3.0});
  const double meas = ball_volume(h2, 2.0) - ball_volume(h2, 1.0);
  CHECK(rel(distribution(w, 1.0), meas) < 1e-13);
  const Profile u = rearrange(w);
  CHECK(u(0.9 * meas) == 3.0);
  CHECK(u(1.1 * meas) == 0.0);
}

TEST_CASE("nonincreasing smooth input uses the exact path") {
  const SpaceParams h2 = SpaceParams::make(2);
  const auto w = WeightedRadialFunction::smooth(
      h2, [](double r) { return std::max(1.0 - r, 0.0); }, 1.0, true);
  // superlevel {w > 1/2} is the ball of radius 1/2
  CHECK(rel(distribution(w, 0.5), 2.0 * M_PI * (std::cosh(0.5) - 1.0)) <
        1e-12);
  const Profile u = rearrange(w);
  for (double rho : {0.1, 0.4, 0.8}) {
    const double t = ball_volume(h2, rho);
    CHECK(rel(u(t), 1.0 - rho) < 1e-10);
  }
}

TEST_CASE("rearrangement of a nonincreasing input is an involution") {
  const SpaceParams h3 = SpaceParams::make(3);
  const auto w = WeightedRadialFunction::smooth(
      h3,
      [](double r) {
        const double s = 1.0 - r * r / 4.0;
        return s > 0.0 ? s * s : 0.0;
      },
      2.0, true);
  const Profile u = rearrange(w);
  // equimeasurability: distribution of u (in Lebesgue measure on t)
  // matches distribution of w at several levels
  for (double lam : {0.1, 0.3, 0.7}) {
    const double mu = distribution(w, lam);
    // u is right-continuous nonincreasing, so |{u > lam}| = sup{t: u(t) > lam}
    double lo = 0.0, hi = ball_volume(h3, 2.0);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (u(mid) > lam ? lo : hi) = mid;
    }
    CHECK(rel(lo, mu) < 1e-9);
  }
}

TEST_CASE("general level-scan path matches the exact step answer") {
  const SpaceParams h2 = SpaceParams::make(2);
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> edges, vals;
    double e = 0.0;
    for (int j = 0; j < 6; ++j) {
      e += 0.2 + 1.5 * U(rng);
      edges.push_back(e);
      vals.push_back(0.1 + 5.0 * U(rng));  // non-monotone levels
    }
    const auto ws = WeightedRadialFunction::step(h2, edges, vals);
    auto vcopy = vals;
    auto ecopy = edges;
    const auto wf = WeightedRadialFunction::smooth(
        h2,
        [ecopy, vcopy](double r) {
          for (size_t i = 0; i < ecopy.size(); ++i)
            if (r < ecopy[i]) return vcopy[i];
          return 0.0;
        },
        edges.back(), false);
    const Profile exact = rearrange(ws);
    const Profile scan = rearrange(wf);
    const double total = ball_volume(h2, edges.back());
    for (double frac : {0.03, 0.1, 0.3, 0.55, 0.8, 0.97}) {
      const double t = frac * total;
      CHECK(std::abs(scan(t) - exact(t)) <
            1e-6 * std::max(1.0, std::abs(exact(t))) + 1e-8);
    }
  }
}

TEST_CASE("lebesgue rearrangement of a unimodal function") {
  // h(t) = t(2-t) on (0,2): h* (s) = 1 - s^2/4 (symmetric decreasing)
  const Profile hs = rearrange_lebesgue(
      [](double t) { return t < 2.0 ? t * (2.0 - t) : 0.0; }, 2.0);
  for (double s : {0.2, 0.8, 1.5})
    CHECK(rel(hs(s), 1.0 - s * s / 4.0) < 1e-5);
  CHECK(hs(2.5) == 0.0);
}

}  // TEST_SUITE
