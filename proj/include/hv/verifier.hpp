#pragma once

#include <string>
#include <vector>

#include "hv/geometry.hpp"
#include "hv/profile.hpp"
#include "hv/radial.hpp"
#include "hv/report.hpp"

namespace hv {

/// sinh^{q(n-1)}(F(t)) >= (t/sigma_n)^{q(n-1)/n} + ((n-1)/n)^q (t/sigma_n)^q,
/// checked per grid point after dividing by the dominant term (log domain).
/// q below 2n/(n-1) -> unsupported rows.
std::vector<InequalityReport> check_keyest(int n, double q,
                                           const std::vector<double>& t_grid,
                                           double tol = 1e-9);

/// sinh^n(F(t)) > t/sigma_n, reported as n log sinh F(t) - ln(t/sigma_n) > 0.
std::vector<InequalityReport> check_keyyeu(int n,
                                           const std::vector<double>& t_grid,
                                           double tol = 1e-9);

/// Strict monotonicity of phi on consecutive grid points.
std::vector<InequalityReport> check_phi_monotone(
    int n, const std::vector<double>& t_grid, double tol = 1e-12);

/// ||u**||_{p,q} <= p' ||u*||_{p,q} for a nonincreasing profile.
InequalityReport check_hardy_maximal(const Profile& u, double p, double q,
                                     double tol = 1e-10);

/// 1D Hardy for a piecewise-linear compactly supported u given by knots:
/// int |u'|^q t^{p-1} >= ((p-q)/q)^q int |u|^q t^{p-q-1}.
InequalityReport check_1d_hardy(const std::vector<double>& knots_t,
                                const std::vector<double>& knots_y, double p,
                                double q, double tol = 1e-10);

/// ||nabla_g^m u||_{p,q}^q >= C(n,m,p)^q ||u||_{p,q}^q.
InequalityReport check_poincare(const SmoothRadialFunction& u,
                                const std::string& fname, int n, int m,
                                double p, double q, double tol = 1e-8);

/// ||nabla_g^m u||^q - C^q ||u||^q >= S(n,m,p)^q ||u||_{p_m*,q}^q.
InequalityReport check_poincare_sobolev(const SmoothRadialFunction& u,
                                        const std::string& fname, int n,
                                        int m, double p, double q,
                                        double tol = 1e-7);

/// The nine order-2 rows (order2I1, order2I2, order2II2, order2II3,
/// LSorder2*, LSorder2, improvedLS2, improvedLS2a, major) on one test
/// function.
std::vector<InequalityReport> check_order2_chain(const SmoothRadialFunction& u,
                                                 const std::string& fname,
                                                 int n, double p, double q,
                                                 double tol = 1e-7);

/// ||T v||-integral <= (pp'/(n-1)^2)^q ||v||-integral for a nonincreasing
/// profile v.
InequalityReport check_tnorm(const Profile& v, const std::string& vname,
                             int n, double p, double q, double tol = 1e-8);

/// Cartesian-product driver.  Grids left empty fall back to the singleton
/// default for that axis.
struct SweepSpec {
  std::string inequality;  // registry name
  std::vector<int> ns;
  std::vector<int> ms;
  std::vector<double> ps;
  std::vector<double> qs;
  std::vector<double> t_grid;
  std::vector<std::string> functions;  // bump(rho0,k) / plateau(r1,r2)
  double tol = 1e-9;
  int jobs = 1;
};

std::vector<InequalityReport> sweep(const SweepSpec& spec);

/// Parse bump(rho0,k) / plateau(r1,r2).
SmoothRadialFunction parse_radial_function(const std::string& text);

}  // namespace hv
