#include "hv/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hv/quadrature.hpp"

namespace hv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

MajorantResult majorant_v(const Profile& f_star_star,
                          const SpaceParams& space) {
  bool zero = true;
  for (const Piece& p : f_star_star.pieces)
    if (!p.is_zero()) { zero = false; break; }
  if (zero) return MajorantResult{Profile::zero(), [](double) { return 0.0; }};

  if (!f_star_star.nonincreasing)
    throw std::domain_error("majorant_v: f** must be flagged nonincreasing");

  const double tail = f_star_star.tail_exponent();
  if (tail >= 0.0)
    throw std::domain_error("majorant_v: divergent tail (exponent >= 0)");

  const Profile f = f_star_star;  // captured by value: vprime outlives the call
  auto vprime_mag = [f, space](double t) {
    // t f**(t) / K(t)^2 in the log domain
    const double fv = f(t);
    if (fv == 0.0) return 0.0;
    return fv * std::exp(std::log(t) - 2.0 * log_surface_factor(space, t));
  };
  auto integrand_x = [&vprime_mag](double x) {  // d(ln s) variable
    const double s = std::exp(x);
    return vprime_mag(s) * s;
  };

  // compactly supported input: v vanishes exactly at the support end
  const bool compact = std::isinf(tail) && tail < 0.0;
  const double t_supp = compact ? f.breaks.back() : kInf;

  // tabulation grid: 400 log-spaced points plus the breakpoints of f**,
  // refined geometrically toward the support end where v plunges to zero
  const double t_min = compact ? std::min(1e-8, t_supp * 1e-4) : 1e-8;
  double t_hi = compact ? t_supp : 1e4;
  if (!compact && !f.breaks.empty()) t_hi = std::max(t_hi, 10.0 * f.breaks.back());
  std::vector<double> grid;
  const int npts = 400;
  const double lx0 = std::log(t_min), lx1 = std::log(t_hi);
  for (int j = 0; j <= npts; ++j)
    grid.push_back(std::exp(lx0 + (lx1 - lx0) * j / npts));
  for (double b : f.breaks)
    if (b > t_min * (1 + 1e-12) && b < t_hi * (1 - 1e-12)) grid.push_back(b);
  if (compact) {
    // the support end itself carries v = 0; keep the grid strictly inside
    std::erase_if(grid, [&](double t) { return t >= t_supp * (1.0 - 5e-13); });
    for (int k = 1; k <= 12; ++k)
      grid.push_back(t_supp * (1.0 - std::pow(10.0, -k)));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // v at the top of the grid: the sliver up to the support end, or a
  // decade march upward until quiet
  double v_top = 0.0;
  if (compact) {
    v_top = integrate(integrand_x, std::log(grid.back()), std::log(t_supp),
                      1e-13);
  } else {
    double x = lx1;
    int quiet = 0;
    while (x < std::log(1e60) && quiet < 3) {
      const double chunk = integrate(integrand_x, x, x + M_LN10, 1e-13);
      v_top += chunk;
      quiet = (std::abs(chunk) <= 1e-14 * std::abs(v_top)) ? quiet + 1 : 0;
      x += M_LN10;
    }
  }

  // accumulate downward: v(t_k) = v(t_{k+1}) + \int_{t_k}^{t_{k+1}}
  std::vector<double> vs(grid.size());
  vs.back() = v_top;
  for (size_t j = grid.size() - 1; j > 0; --j)
    vs[j - 1] = vs[j] + integrate(integrand_x, std::log(grid[j - 1]),
                                  std::log(grid[j]), 1e-12);

  std::vector<double> lxs(grid.size());
  for (size_t j = 0; j < grid.size(); ++j) lxs[j] = std::log(grid[j]);

  MajorantResult out;
  out.v.nonincreasing = true;
  if (compact) {
    out.v.breaks = {t_supp};
    out.v.pieces.assign(2, Piece{});
    out.v.pieces[0].table =
        SampleTable::build(std::move(lxs), std::move(vs), 0.0, 0.0);
  } else {
    out.v.pieces[0].table =
        SampleTable::build(std::move(lxs), std::move(vs), 0.0, tail);
  }
  out.vprime = [vprime_mag](double t) { return -vprime_mag(t); };
  return out;
}

Profile apply_T(const Profile& v, const SpaceParams& space) {
  if (!v.nonincreasing)
    throw std::domain_error("apply_T: v must be flagged nonincreasing");
  Profile g = maximal(v);
  MajorantResult r = majorant_v(g, space);
  return r.v;
}

}  // namespace hv
