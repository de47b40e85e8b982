#include "hv/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hv {
namespace {

constexpr int kGaussOrder = 15;

struct GaussRule {
  std::array<double, kGaussOrder> node{};
  std::array<double, kGaussOrder> weight{};
};

// Nodes/weights on [-1,1] by Newton iteration on the Legendre recurrence.
GaussRule build_rule() {
  GaussRule r;
  const int n = kGaussOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.node[i] = -x;
    r.node[n - 1 - i] = x;
    r.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weight[n - 1 - i] = r.weight[i];
  }
  return r;
}

const GaussRule& rule() {
  static const GaussRule r = build_rule();
  return r;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& r = rule();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) s += r.weight[i] * f(c + h * r.node[i]);
  return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, double abs_floor, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gauss_panel(f, a, m);
  const double right = gauss_panel(f, m, b);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  if (err <= tol * std::abs(refined) + abs_floor || depth >= 48 || m <= a || m >= b)
    return refined;
  return adapt(f, a, m, left, tol, 0.5 * abs_floor, depth + 1) +
         adapt(f, m, b, right, tol, 0.5 * abs_floor, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor) {
  if (!(a <= b)) throw std::domain_error("integrate: interval reversed");
  if (a == b) return 0.0;
  const double whole = gauss_panel(f, a, b);
  // default absolute budget tied to the global scale: keeps endpoint
  // singularities from driving unbounded panel splitting
  if (abs_floor <= 0.0) abs_floor = 0.1 * rel_tol * std::abs(whole);
  return adapt(f, a, b, whole, rel_tol, abs_floor, 0);
}

double integrate_decades(const std::function<double(double)>& g,
                         double anchor_lo, double anchor_hi, double rel_tol) {
  if (!(anchor_lo > 0.0) || !(anchor_hi > anchor_lo))
    throw std::domain_error("integrate_decades: bad anchor window");
  // integrate in x = ln t
  auto in_x = [&g](double x) {
    const double t = std::exp(x);
    return g(t) * t;
  };
  const double ln10 = std::log(10.0);
  double x_lo = std::log(anchor_lo), x_hi = std::log(anchor_hi);
  double total = integrate(in_x, x_lo, x_hi, rel_tol * 0.1);

  const double x_min = std::log(1e-60), x_max = std::log(1e60);
  int quiet = 0;
  double x = x_hi;
  while (x < x_max && quiet < 3) {
    double chunk = integrate(in_x, x, x + ln10, rel_tol * 0.1);
    total += chunk;
    quiet = (std::abs(chunk) <= rel_tol * std::abs(total)) ? quiet + 1 : 0;
    x += ln10;
  }
  quiet = 0;
  x = x_lo;
  while (x > x_min && quiet < 3) {
    double chunk = integrate(in_x, x - ln10, x, rel_tol * 0.1);
    total += chunk;
    quiet = (std::abs(chunk) <= rel_tol * std::abs(total)) ? quiet + 1 : 0;
    x -= ln10;
  }
  return total;
}

}  // namespace hv
