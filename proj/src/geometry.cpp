#include "hv/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hv/quadrature.hpp"

namespace hv {
namespace {

// \int_0^rho sinh^{n-1}(s) ds, linear scale.  Overflows to +inf for
// (n-1)*rho beyond double range; callers needing larger arguments use
// log_volume_integral.
double volume_integral(int n, double rho) {
  if (rho == 0.0) return 0.0;
  if (n == 2) {
    const double h = std::sinh(0.5 * rho);
    return 2.0 * h * h;  // cosh(rho) - 1
  }
  if (n == 3) {
    // (sinh(2 rho) - 2 rho) / 4, series near 0 to avoid cancellation
    const double x = 2.0 * rho;
    if (x < 0.5) {
      double term = x * x * x / 6.0, sum = 0.0;
      for (int k = 1; term != 0.0 && k < 40; ++k) {
        sum += term;
        term *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        if (term < 1e-18 * sum) { sum += term; break; }
      }
      return 0.25 * sum;
    }
    return 0.25 * (std::sinh(x) - x);
  }
  if (rho < 1.0) {
    // positive integrand: full relative accuracy, no cancellation
    return integrate([n](double s) { return std::pow(std::sinh(s), n - 1); },
                     0.0, rho, 1e-14);
  }
  return detail::volume_integral_expansion(n, rho);
}

void require_space(const SpaceParams& space) {
  if (space.n < 2) throw std::domain_error("SpaceParams: n must be >= 2");
}

}  // namespace

namespace detail {

double volume_integral_expansion(int n, double rho) {
  const int m = n - 1;
  double sum = 0.0, binom = 1.0;
  for (int j = 0; j <= m; ++j) {
    const int k = m - 2 * j;
    const double g = (k == 0) ? rho : std::expm1(k * rho) / k;
    sum += (j % 2 ? -binom : binom) * g;
    binom = binom * (m - j) / (j + 1.0);
  }
  return std::ldexp(sum, -m);  // * 2^{1-n}
}

}  // namespace detail

SpaceParams SpaceParams::make(int n) {
  if (n < 2) throw std::domain_error("SpaceParams: n must be >= 2");
  return SpaceParams{n, unit_ball_volume(n)};
}

double unit_ball_volume(int n) {
  if (n < 1) throw std::domain_error("unit_ball_volume: n must be >= 1");
  return std::exp(0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n + 1.0));
}

double log_sinh(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_sinh: x must be > 0");
  if (x < 1e-4) {
    const double x2 = x * x;
    return std::log(x) + std::log1p(x2 / 6.0 + x2 * x2 / 120.0);
  }
  if (x > 20.0) return x - M_LN2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double ball_volume(const SpaceParams& space, double rho) {
  require_space(space);
  if (rho < 0.0) throw std::domain_error("ball_volume: rho must be >= 0");
  if (rho == 0.0) return 0.0;
  const int m = space.n - 1;
  if (m * rho <= 600.0)
    return space.n * space.sigma_n * volume_integral(space.n, rho);
  // log-domain asymptotic branch; may legitimately overflow to +inf
  return space.n * space.sigma_n * std::exp(log_volume_integral(space, rho));
}

double log_volume_integral(const SpaceParams& space, double rho) {
  require_space(space);
  if (!(rho > 0.0)) throw std::domain_error("log_volume_integral: rho must be > 0");
  const int m = space.n - 1;
  if (m * rho <= 600.0) return std::log(volume_integral(space.n, rho));
  // factor out e^{(n-1) rho}: remaining series is O(1)
  double sum = 0.0, binom = 1.0;
  const double drop = std::exp(-m * rho);
  for (int j = 0; j <= m; ++j) {
    const int k = m - 2 * j;
    double g;
    if (k == 0)
      g = rho * drop;
    else
      g = (std::exp(-2.0 * j * rho) - drop) / k;
    sum += (j % 2 ? -binom : binom) * g;
    binom = binom * (m - j) / (j + 1.0);
  }
  return m * rho - m * M_LN2 + std::log(sum);
}

double inverse_volume(const SpaceParams& space, double t) {
  require_space(space);
  if (t < 0.0) throw std::domain_error("inverse_volume: t must be >= 0");
  if (t == 0.0) return 0.0;
  const int n = space.n;
  const double sig = space.sigma_n;

  double seed;
  if (t < sig)
    seed = std::pow(t / sig, 1.0 / n);
  else
    seed = std::log(t * (n - 1) * std::pow(2.0, n - 1) / (n * sig)) / (n - 1);
  if (!(seed > 0.0)) seed = std::pow(t / sig, 1.0 / n);

  // bracket the root
  double lo = 0.0, hi = std::max(seed, 1e-300);
  while (ball_volume(space, hi) < t) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) throw std::runtime_error("inverse_volume: bracketing failed");
  }

  double rho = std::min(std::max(seed, lo), hi);
  for (int it = 0; it < 200; ++it) {
    const double v = ball_volume(space, rho) - t;
    if (std::abs(v) <= 1e-14 * t) return rho;
    if (v > 0.0) hi = rho; else lo = rho;
    const double dv =
        n * sig * std::exp((n - 1) * log_sinh(std::max(rho, 1e-300)));
    double next = rho - v / dv;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (next == rho) return rho;
    rho = next;
  }
  if (std::abs(ball_volume(space, rho) - t) <= 1e-11 * t) return rho;
  throw std::runtime_error("inverse_volume: Newton did not converge at t=" +
                           std::to_string(t));
}

double log_sinh_F(const SpaceParams& space, double t) {
  if (!(t > 0.0)) throw std::domain_error("log_sinh_F: t must be > 0");
  return log_sinh(inverse_volume(space, t));
}

double phi(const SpaceParams& space, double t) {
  if (!(t > 0.0)) throw std::domain_error("phi: t must be > 0");
  return t * std::exp(-(space.n - 1) * log_sinh_F(space, t));
}

double eta(const SpaceParams& space, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("eta: rho must be > 0");
  return std::exp(log_volume_integral(space, rho) -
                  (space.n - 1) * log_sinh(rho));
}

double log_surface_factor(const SpaceParams& space, double t) {
  return std::log(space.n * space.sigma_n) + (space.n - 1) * log_sinh_F(space, t);
}

double surface_factor(const SpaceParams& space, double t) {
  return std::exp(log_surface_factor(space, t));
}

}  // namespace hv
