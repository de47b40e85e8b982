#pragma once

#include <functional>
#include <vector>

#include "hv/geometry.hpp"
#include "hv/profile.hpp"

namespace hv {

/// A radial function |w|(rho) on H^n paired with its ambient space.
/// Either the support radius is finite or the function must be flagged
/// nonincreasing (so superlevel sets are balls and stay computable).
/// Piecewise-constant inputs keep their exact representation for the
/// closed-form rearrangement path.
struct WeightedRadialFunction {
  SpaceParams space;
  std::function<double(double)> value;  // |w|(rho)
  double support_radius = 0.0;          // w == 0 for rho >= this (inf allowed)
  bool nonincreasing = false;

  // exact step representation: levels[i] on [rho_edges[i-1], rho_edges[i])
  std::vector<double> rho_edges;
  std::vector<double> levels;
  bool is_step() const { return !rho_edges.empty(); }

  static WeightedRadialFunction step(const SpaceParams& space,
                                     std::vector<double> rho_edges,
                                     std::vector<double> levels);
  static WeightedRadialFunction smooth(const SpaceParams& space,
                                       std::function<double(double)> fn,
                                       double support_radius,
                                       bool nonincreasing = false);
};

/// mu_w(lambda) = V_g({rho : |w(rho)| > lambda}); +inf when the superlevel
/// set has infinite measure.
double distribution(const WeightedRadialFunction& w, double lambda);

/// Decreasing rearrangement u*(t) = sup{s > 0 : mu_w(s) > t} as a Profile
/// in the volume variable.  Exact for step inputs and for nonincreasing
/// inputs (u*(t) = w(F(t))); level-set tabulation otherwise.
Profile rearrange(const WeightedRadialFunction& w);

/// Lebesgue decreasing rearrangement of |h| on (0, t_max); h must vanish
/// (or be negligible) outside (0, t_max).  Used for profiles already
/// living in the volume variable.
Profile rearrange_lebesgue(const std::function<double(double)>& h,
                           double t_max);

}  // namespace hv
