#include "hv/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "hv/geometry.hpp"

namespace hv {
namespace {

void require_exponents(double p, double q) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::domain_error("exponents: need 1 < p < inf");
  if (!(q >= 1.0) || std::isinf(q))
    throw std::domain_error("exponents: need 1 <= q < inf");
}

}  // namespace

ExponentSet ExponentSet::make(int m, double p, double q) {
  if (m < 1) throw std::domain_error("ExponentSet: m must be >= 1");
  require_exponents(p, q);
  return ExponentSet{m, p, q};
}

double ExponentSet::p_prime() const { return p / (p - 1.0); }

double ExponentSet::p_star(int n, int i) const {
  if (i < 0) throw std::domain_error("p_star: i must be >= 0");
  const double denom = n - i * p;
  if (!(denom > 0.0)) throw std::domain_error("p_star: requires n - ip > 0");
  return n * p / denom;
}

bool ExponentSet::poincare_valid() const { return m % 2 == 0 || q <= p; }

bool ExponentSet::sobolev_valid(int n) const {
  return p * m < n && q >= 2.0 * n / (n - 1.0) && (m % 2 == 0 || q <= p);
}

double poincare_constant(int n, int m, double p) {
  if (n < 2) throw std::domain_error("poincare_constant: n must be >= 2");
  if (m < 1) throw std::domain_error("poincare_constant: m must be >= 1");
  require_exponents(p, p);
  const double pp = p * p / (p - 1.0);  // p p'
  const double base = (n - 1.0) * (n - 1.0) / pp;
  if (m % 2 == 0) return std::pow(base, m / 2.0);
  return (n - 1.0) / p * std::pow(base, (m - 1) / 2.0);
}

double sobolev_constant(int n, int m, double p) {
  if (n < 2) throw std::domain_error("sobolev_constant: n must be >= 2");
  if (m < 1) throw std::domain_error("sobolev_constant: m must be >= 1");
  require_exponents(p, p);
  if (!(p * m < n))
    throw std::domain_error("sobolev_constant: requires p < n/m");
  const ExponentSet e = ExponentSet::make(m, p, p);
  auto factor = [n, &e](int i) {
    const double ps = e.p_star(n, i);
    const double ps_prime = ps / (ps - 1.0);
    return n * (n - 2.0 * ps) / (ps * ps_prime);
  };
  double prod = 1.0;
  if (m % 2 == 0) {
    for (int i = 0; i < m / 2; ++i) prod *= factor(2 * i);
  } else {
    prod = (n - p) / p;
    for (int i = 1; i <= (m - 1) / 2; ++i) prod *= factor(2 * i - 1);
  }
  return std::pow(unit_ball_volume(n), static_cast<double>(m) / n) * prod;
}

LqConstant lorentz_sobolev_constant_lq(int n, double p, double q, double l) {
  require_exponents(p, q);
  if (l != q) return LqConstant{false, 0.0};
  if (!(p < n))
    throw std::domain_error("lorentz_sobolev_constant_lq: requires p < n");
  return LqConstant{true,
                    std::pow(unit_ball_volume(n), 1.0 / n) * (n - p) / p};
}

}  // namespace hv
