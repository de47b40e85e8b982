#pragma once

#include <functional>

#include "hv/geometry.hpp"

namespace hv {

/// A radial test function u(rho) with analytic first and second
/// derivatives, compactly supported, even in rho (so u'(0) = 0).
struct SmoothRadialFunction {
  std::function<double(double)> f, df, ddf;
  double support_radius = 0.0;
  int smoothness = 2;  // continuous derivatives available at the support edge

  double operator()(double rho) const { return f(rho); }
};

/// bump(rho0, k): (1 - (rho/rho0)^2)_+^k, nonincreasing, C^{k-1}.
SmoothRadialFunction bump(double rho0, int k);

/// plateau(r1, r2): 1 on [0, r1], C^3 smoothstep down to 0 at r2.
SmoothRadialFunction plateau(double r1, double r2);

/// Radial Laplace-Beltrami operator: (Delta_g u)(rho) =
/// u''(rho) + (n-1) coth(rho) u'(rho), with limit n u''(0) at the origin.
/// The returned derivatives are 5-point finite differences of the value,
/// using the evenness of radial functions across rho = 0.
SmoothRadialFunction laplacian_radial(const SmoothRadialFunction& u,
                                      const SpaceParams& space);

/// rho -> |u'(rho)|.
std::function<double(double)> grad_norm_radial(const SmoothRadialFunction& u);

/// rho -> |nabla_g^m u|: |Delta_g^{m/2} u| for even m,
/// |(Delta_g^{(m-1)/2} u)'| for odd m.
std::function<double(double)> nabla_m_norm(const SmoothRadialFunction& u,
                                           int m, const SpaceParams& space);

/// coth(rho) with the removable-singularity series for small rho.
double coth_safe(double rho);

}  // namespace hv
