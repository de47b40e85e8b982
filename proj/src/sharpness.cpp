#include "hv/sharpness.hpp"

#include <cmath>
#include <stdexcept>

#include "hv/constants.hpp"
#include "hv/majorant.hpp"
#include "hv/quadrature.hpp"
#include "hv/rearrange.hpp"

namespace hv {

Profile make_fR(double a, double R, double p) {
  if (!(a > 0.0) || !(R > a))
    throw std::domain_error("make_fR: need 0 < a < R");
  if (!(p > 1.0)) throw std::domain_error("make_fR: need p > 1");
  Profile f;
  f.breaks = {a, R, 2.0 * R};
  f.pieces.assign(4, Piece{});
  f.pieces[0].terms = {Term{std::pow(a, -1.0 / p), 0.0, 0}};
  f.pieces[1].terms = {Term{1.0, -1.0 / p, 0}};
  const double cR = std::pow(R, -1.0 / p);
  f.pieces[2].terms = {Term{2.0 * cR, 0.0, 0}, Term{-cR / R, 1.0, 0}};
  f.nonincreasing = true;
  return f;
}

double fR_lorentz_identity(double a, double R, double p, double q) {
  if (!(a > 0.0) || !(R > a))
    throw std::domain_error("fR_lorentz_identity: need 0 < a < R");
  if (!(p > 1.0) || !(q >= 1.0))
    throw std::domain_error("fR_lorentz_identity: need p > 1, q >= 1");
  const double taper = integrate(
      [p, q](double s) {
        return std::pow(2.0 - s, q) * std::pow(s, q / p - 1.0);
      },
      1.0, 2.0, 1e-13);
  return p / q + std::log(R / a) + taper;
}

VRIterate iterate_vR(const Profile& fR, int k, const SpaceParams& space) {
  if (k < 0) throw std::domain_error("iterate_vR: k must be >= 0");
  if (k == 0) {
    // derivative of the three analytic pieces of f_R
    if (fR.breaks.size() != 3)
      throw std::domain_error("iterate_vR: k = 0 expects an f_R profile");
    const double a = fR.breaks[0], R = fR.breaks[1];
    const double mp = -fR.pieces[1].terms[0].expo;  // 1/p
    const double cR = std::pow(R, -mp);
    auto dv = [a, R, mp, cR](double t) {
      if (t < a || t >= 2.0 * R) return 0.0;
      if (t < R) return -mp * std::pow(t, -mp - 1.0);
      return -cR / R;
    };
    return VRIterate{fR, dv};
  }
  Profile v = fR;
  for (int i = 0; i < k - 1; ++i) v = apply_T(v, space);
  MajorantResult maj = majorant_v(maximal(v), space);
  return VRIterate{maj.v, maj.vprime};
}

double select_inner_cutoff(const SpaceParams& space, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("select_inner_cutoff: eps must be > 0");
  const double target = space.n * space.sigma_n / ((1.0 + eps) * (space.n - 1));
  double hi = 1.0;
  while (phi(space, hi) < target) {
    hi *= 2.0;
    if (hi > 1e15)
      throw std::runtime_error("select_inner_cutoff: bracketing failed");
  }
  double lo = hi > 1.0 ? hi / 2.0 : 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (phi(space, mid) >= target) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

double sharpness_ratio(int n, int m, double p, double q, double a, double R) {
  if (m < 1) throw std::domain_error("sharpness_ratio: m must be >= 1");
  const SpaceParams space = SpaceParams::make(n);
  const Profile fR = make_fR(a, R, p);
  if (m % 2 == 0) {
    const int k = m / 2;
    const VRIterate it = iterate_vR(fR, k, space);
    const double num = fR_lorentz_identity(a, R, p, q);
    const double den = weighted_power_integral(it.v, q, q / p);
    return num / den;
  }
  // odd m = 2k+1: numerator is the quasi-norm of |grad u_R| with the
  // radial profile v_{R,k} composed with the ball volume; by the chain
  // rule |u_R'(rho)| = |v'(t)| K(t), rearranged in the volume variable.
  const int k = (m - 1) / 2;
  const VRIterate it = iterate_vR(fR, k, space);
  auto dv = it.dv;
  auto grad_t = [dv, space](double t) {
    const double d = std::abs(dv(t));
    if (d == 0.0) return 0.0;
    return d * surface_factor(space, t);
  };
  const double t_max = (k == 0) ? 2.0 * R : 2.0e6 * R;
  const Profile grad_star = rearrange_lebesgue(grad_t, t_max);
  const double num = weighted_power_integral(grad_star, q, q / p);
  const double den = (k == 0) ? fR_lorentz_identity(a, R, p, q)
                              : weighted_power_integral(it.v, q, q / p);
  return num / den;
}

SharpnessResult sharpness_experiment(int n, int m, double p, double q,
                                     double eps, double R) {
  const SpaceParams space = SpaceParams::make(n);
  SharpnessResult out;
  out.n = n;
  out.m = m;
  out.p = p;
  out.q = q;
  out.eps = eps;
  out.R = R;
  // the cutoff rule can exceed R at small R; cap to keep a < R feasible
  out.a = std::min(select_inner_cutoff(space, eps), R / 4.0);
  out.ratio = sharpness_ratio(n, m, p, q, out.a, R);
  out.C_pow_q = std::pow(poincare_constant(n, m, p), q);
  return out;
}

}  // namespace hv
