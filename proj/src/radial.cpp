#include "hv/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace hv {

double coth_safe(double rho) {
  if (rho < 1e-3) {
    if (rho <= 0.0) throw std::domain_error("coth_safe: rho must be > 0");
    return 1.0 / rho + rho / 3.0 - rho * rho * rho / 45.0;
  }
  return 1.0 / std::tanh(rho);
}

SmoothRadialFunction bump(double rho0, int k) {
  if (!(rho0 > 0.0) || k < 2)
    throw std::invalid_argument("bump: need rho0 > 0, k >= 2");
  SmoothRadialFunction u;
  u.support_radius = rho0;
  u.smoothness = k - 1;
  u.f = [rho0, k](double rho) {
    const double x = rho / rho0;
    const double b = 1.0 - x * x;
    return b > 0.0 ? std::pow(b, k) : 0.0;
  };
  u.df = [rho0, k](double rho) {
    const double x = rho / rho0;
    const double b = 1.0 - x * x;
    return b > 0.0 ? -2.0 * k * rho / (rho0 * rho0) * std::pow(b, k - 1) : 0.0;
  };
  u.ddf = [rho0, k](double rho) {
    const double x = rho / rho0;
    const double b = 1.0 - x * x;
    if (!(b > 0.0)) return 0.0;
    const double r2 = rho0 * rho0;
    double v = -2.0 * k / r2 * std::pow(b, k - 1);
    if (k >= 2)
      v += 4.0 * k * (k - 1) * rho * rho / (r2 * r2) * std::pow(b, k - 2);
    return v;
  };
  return u;
}

SmoothRadialFunction plateau(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > r1))
    throw std::invalid_argument("plateau: need 0 < r1 < r2");
  SmoothRadialFunction u;
  u.support_radius = r2;
  u.smoothness = 3;
  const double w = r2 - r1;
  // S(s) = 35 s^4 - 84 s^5 + 70 s^6 - 20 s^7 (C^3 smoothstep)
  auto S = [](double s) {
    return s * s * s * s * (35.0 + s * (-84.0 + s * (70.0 - 20.0 * s)));
  };
  auto dS = [](double s) {
    const double a = s * (1.0 - s);
    return 140.0 * a * a * a;
  };
  auto ddS = [](double s) {
    const double a = s * (1.0 - s);
    return 420.0 * a * a * (1.0 - 2.0 * s);
  };
  u.f = [r1, r2, w, S](double rho) {
    if (rho <= r1) return 1.0;
    if (rho >= r2) return 0.0;
    return 1.0 - S((rho - r1) / w);
  };
  u.df = [r1, r2, w, dS](double rho) {
    if (rho <= r1 || rho >= r2) return 0.0;
    return -dS((rho - r1) / w) / w;
  };
  u.ddf = [r1, r2, w, ddS](double rho) {
    if (rho <= r1 || rho >= r2) return 0.0;
    return -ddS((rho - r1) / w) / (w * w);
  };
  return u;
}

namespace {

// Evaluate an even function of rho, extending across the origin.
double even_eval(const std::function<double(double)>& f, double x) {
  return f(std::abs(x));
}

}  // namespace

SmoothRadialFunction laplacian_radial(const SmoothRadialFunction& u,
                                      const SpaceParams& space) {
  if (u.smoothness < 2)
    throw std::domain_error("laplacian_radial: smoothness order < 2");
  const int n = space.n;
  auto df = u.df, ddf = u.ddf;
  const double R = u.support_radius;
  auto value = [n, df, ddf, R](double rho) {
    if (rho >= R) return 0.0;
    if (rho < 1e-8) return n * ddf(0.0);
    return ddf(rho) + (n - 1) * coth_safe(rho) * df(rho);
  };
  SmoothRadialFunction out;
  out.support_radius = R;
  out.smoothness = std::max(0, u.smoothness - 2);
  out.f = value;
  out.df = [value](double rho) {
    const double h = 1e-4 * (1.0 + rho);
    return (-even_eval(value, rho + 2 * h) + 8 * even_eval(value, rho + h) -
            8 * even_eval(value, rho - h) + even_eval(value, rho - 2 * h)) /
           (12.0 * h);
  };
  out.ddf = [value](double rho) {
    const double h = 1e-4 * (1.0 + rho);
    return (-even_eval(value, rho + 2 * h) + 16 * even_eval(value, rho + h) -
            30 * even_eval(value, rho) + 16 * even_eval(value, rho - h) -
            even_eval(value, rho - 2 * h)) /
           (12.0 * h * h);
  };
  return out;
}

std::function<double(double)> grad_norm_radial(const SmoothRadialFunction& u) {
  auto df = u.df;
  return [df](double rho) { return std::abs(df(rho)); };
}

std::function<double(double)> nabla_m_norm(const SmoothRadialFunction& u,
                                           int m, const SpaceParams& space) {
  if (m < 1) throw std::domain_error("nabla_m_norm: m must be >= 1");
  SmoothRadialFunction w = u;
  for (int j = 0; j < m / 2; ++j) w = laplacian_radial(w, space);
  if (m % 2 == 1) return grad_norm_radial(w);
  auto f = w.f;
  return [f](double rho) { return std::abs(f(rho)); };
}

}  // namespace hv
