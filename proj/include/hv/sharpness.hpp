#pragma once

#include <functional>
#include <vector>

#include "hv/geometry.hpp"
#include "hv/profile.hpp"

namespace hv {

/// The extremal family: flat a^{-1/p} on (0,a), power s^{-1/p} on [a,R),
/// linear taper R^{-1/p} max{2 - s/R, 0} beyond.
Profile make_fR(double a, double R, double p);

/// Closed form of int f_R^q t^{q/p-1} dt:
/// p/q + ln(R/a) + int_1^2 (2-s)^q s^{q/p-1} ds.
double fR_lorentz_identity(double a, double R, double p, double q);

/// v_{R,k} = T^k f_R together with the exact derivative of the last
/// iterate (dv = f_R' itself when k = 0).
struct VRIterate {
  Profile v;
  std::function<double(double)> dv;
};
VRIterate iterate_vR(const Profile& fR, int k, const SpaceParams& space);

/// Smallest s with phi(s) >= n sigma_n / ((1+eps)(n-1)), i.e. the paper's
/// inner cutoff making K(s) <= (1+eps)(n-1)s for s >= a.
double select_inner_cutoff(const SpaceParams& space, double eps);

/// ||nabla_g^m u_R||_{p,q}^q / ||u_R||_{p,q}^q for u_R built on v_{R,k};
/// approaches C(n,m,p)^q from above as R grows.
double sharpness_ratio(int n, int m, double p, double q, double a, double R);

struct SharpnessResult {
  int n = 0, m = 0;
  double p = 0, q = 0, eps = 0, a = 0, R = 0;
  double ratio = 0, C_pow_q = 0;
};

/// One experiment: a from the cutoff rule (capped at R/4 so that a < R
/// stays feasible at small R), then the ratio.
SharpnessResult sharpness_experiment(int n, int m, double p, double q,
                                     double eps, double R);

}  // namespace hv
