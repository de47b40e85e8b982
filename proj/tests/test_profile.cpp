#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "hv/profile.hpp"
#include "hv/quadrature.hpp"

using namespace hv;

namespace {
double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_SUITE("profile") {

TEST_CASE("constructors and evaluation") {
  const Profile z = Profile::zero();
  CHECK(z(0.5) == 0.0);
  const Profile c = Profile::constant(3.5);
  CHECK(c(1e-8) == 3.5);
  CHECK(c(1e8) == 3.5);
  const Profile pw = Profile::power(2.0, -0.5);
  CHECK(rel(pw(4.0), 1.0) < 1e-15);
  const Profile st = Profile::step({1.0, 3.0}, {5.0, 2.0});
  CHECK(st(0.2) == 5.0);
  CHECK(st(1.0) == 2.0);  // right-continuous at a breakpoint
  CHECK(st(2.9) == 2.0);
  CHECK(st(3.0) == 0.0);
  CHECK(st.nonincreasing);
}

TEST_CASE("head and tail exponents") {
  CHECK(Profile::power(1.0, -0.25).tail_exponent() == doctest::Approx(-0.25));
  CHECK(Profile::power(1.0, -0.25).head_exponent() == doctest::Approx(-0.25));
  CHECK(Profile::step({2.0}, {1.0}).tail_exponent() ==
        -std::numeric_limits<double>::infinity());
  CHECK(Profile::constant(1.0).tail_exponent() == 0.0);
}

TEST_CASE("lorentz quasinorm of an indicator") {
  // u = c on (0, V): ||u||_{p,q} = c (p/q)^{1/q} V^{1/p}
  for (double p : {1.5, 2.0, 3.0})
    for (double q : {1.0, 2.0, 2.5}) {
      const double c = 1.7, V = 4.2;
      const Profile u = Profile::step({V}, {c});
      const double expect = c * std::pow(p / q, 1.0 / q) * std::pow(V, 1.0 / p);
      CHECK(rel(lorentz_quasinorm(u, p, q), expect) < 1e-12);
    }
}

TEST_CASE("quasinorm divergence") {
  // t^{-1/p} is exactly non-integrable in L^{p,q} at both ends
  const Profile u = Profile::power(1.0, -0.5);
  CHECK(std::isinf(lorentz_quasinorm(u, 2.0, 2.0)));
}

TEST_CASE("quasinorm homogeneity") {
  const Profile u = Profile::step({1.0, 2.0, 7.0}, {3.0, 1.0, 0.25});
  const double base = lorentz_quasinorm(u, 2.5, 1.5);
  CHECK(rel(lorentz_quasinorm(scaled(u, 10.0), 2.5, 1.5), 10.0 * base) <
        1e-13);
}

TEST_CASE("maximal function closed forms") {
  // indicator: u**(t) = c min(1, V/t)
  const Profile st = Profile::step({2.0}, {4.0});
  const Profile stm = maximal(st);
  CHECK(rel(stm(0.5), 4.0) < 1e-14);
  CHECK(rel(stm(8.0), 1.0) < 1e-14);
  // power t^{-1/p}: u** = p' u*
  const Profile pw = Profile::power(3.0, -1.0 / 3.0);
  const Profile pwm = maximal(pw);
  for (double t : {0.1, 1.0, 100.0})
    CHECK(rel(pwm(t), 1.5 * pw(t)) < 1e-13);
  // constants are fixed points
  const Profile c = Profile::constant(2.0);
  CHECK(rel(maximal(c)(5.0), 2.0) < 1e-14);
}

TEST_CASE("maximal function vs direct quadrature") {
  const Profile u = Profile::step({0.5, 1.5, 4.0}, {6.0, 2.5, 0.5});
  const Profile um = maximal(u);
  for (double t : {0.25, 0.5, 1.0, 2.0, 4.0, 9.0}) {
    const double oracle =
        integrate([&](double s) { return u(s); }, 0.0, t, 1e-13) / t;
    CHECK(rel(um(t), oracle) < 1e-11);
  }
}

TEST_CASE("weighted power integral on steps") {
  // int_0^V (c)^q t^{w-1} dt = c^q V^w / w
  const Profile u = Profile::step({3.0}, {2.0});
  CHECK(rel(weighted_power_integral(u, 2.0, 1.5),
            4.0 * std::pow(3.0, 1.5) / 1.5) < 1e-12);
  // divergent tail
  CHECK(std::isinf(weighted_power_integral(Profile::constant(1.0), 1.0, 1.0)));
}

TEST_CASE("hardy bound on random steps") {
  // ||u**||_{p,q} <= p' ||u*||_{p,q}
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> edges, values;
    double e = 0.0, v = 10.0 * (1.0 + U(rng));
    for (int j = 0; j < 5; ++j) {
      e += 0.1 + 3.0 * U(rng);
      edges.push_back(e);
      values.push_back(v);
      v *= 0.2 + 0.7 * U(rng);
    }
    const Profile u = Profile::step(edges, values);
    const Profile um = maximal(u);
    for (double p : {1.5, 2.0})
      CHECK(lorentz_quasinorm(um, p, p) <=
            (p / (p - 1.0)) * lorentz_quasinorm(u, p, p) * (1.0 + 1e-12));
  }
}

TEST_CASE("sample table pchip accuracy and extrapolation") {
  std::vector<double> lx, vals;
  for (double x = std::log(1e-3); x <= std::log(1e3) + 1e-9; x += 0.05) {
    lx.push_back(x);
    vals.push_back(std::exp(-0.5 * x));  // t^{-1/2}
  }
  auto tab = SampleTable::build(lx, vals, -0.5, -0.5);
  for (double t : {2e-3, 0.7, 31.0, 800.0})
    CHECK(rel(tab->eval_logt(std::log(t)), std::pow(t, -0.5)) < 1e-6);
  // power-law extrapolation outside the sampled window
  CHECK(rel(tab->eval_logt(std::log(1e6)), 1e-3) < 1e-6);
  CHECK(rel(tab->eval_logt(std::log(1e-6)), 1e3) < 1e-6);
}

TEST_CASE("save and load round trip") {
  Profile u = Profile::step({1.0, 2.5}, {4.0, 1.5});
  std::stringstream ss;
  u.save(ss);
  const Profile back = Profile::load(ss);
  for (double t : {0.1, 1.0, 2.0, 3.0}) CHECK(u(t) == back(t));
  CHECK(back.nonincreasing == u.nonincreasing);

  Profile pw = Profile::power(2.0, -0.5);
  std::stringstream s2;
  pw.save(s2);
  const Profile back2 = Profile::load(s2);
  CHECK(rel(back2(9.0), pw(9.0)) < 1e-15);
}

}  // TEST_SUITE
