#pragma once

#include <cmath>

namespace hv {

/// Geometry of the hyperbolic space H^n in geodesic polar coordinates.
/// sigma_n is the volume of the Euclidean unit ball in R^n.
struct SpaceParams {
  int n = 2;
  double sigma_n = M_PI;

  static SpaceParams make(int n);
};

/// Volume of the Euclidean unit ball, pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

/// Overflow-safe ln(sinh(x)) for x > 0.
double log_sinh(double x);

/// Volume of the geodesic ball of radius rho:
///   V(rho) = n sigma_n \int_0^rho sinh^{n-1}(s) ds.
double ball_volume(const SpaceParams& space, double rho);

/// ln of \int_0^rho sinh^{n-1}(s) ds, stable for large (n-1)*rho.
double log_volume_integral(const SpaceParams& space, double rho);

/// Geodesic radius F(t) of the ball of volume t; inverse of ball_volume.
/// Safeguarded Newton seeded by the small-t and large-t asymptotic branches.
double inverse_volume(const SpaceParams& space, double t);

/// ln sinh(F(t)).  All powers sinh^{alpha}(F(t)) downstream are formed as
/// exp(alpha * log_sinh_F) or compared in the log domain.
double log_sinh_F(const SpaceParams& space, double t);

/// phi(t) = t / sinh^{n-1}(F(t)); strictly increasing with limit
/// n sigma_n / (n-1) as t -> inf.
double phi(const SpaceParams& space, double t);

/// eta(rho) = \int_0^rho sinh^{n-1}(s) ds / sinh^{n-1}(rho); strictly
/// increasing with limit 1/(n-1).
double eta(const SpaceParams& space, double rho);

/// K(t) = n sigma_n sinh^{n-1}(F(t)), the surface area of the ball of
/// volume t, in the log domain.
double log_surface_factor(const SpaceParams& space, double t);
double surface_factor(const SpaceParams& space, double t);

namespace detail {
/// \int_0^rho sinh^{n-1}(s) ds by the exact exponential-polynomial
/// expansion of sinh^{n-1} (binomial theorem).  Test oracle for the
/// production path and the large-rho branch.
double volume_integral_expansion(int n, double rho);
}  // namespace detail

}  // namespace hv
