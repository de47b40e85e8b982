#include "hv/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Generic level-set scanner: samples hs of |h| at monotone locations xs,
// a refinement callback for locating crossings, and a cumulative measure
// M(x) so that measure([a,b]) = M(b) - M(a).  The sample grid is assumed
// dense enough that each cell holds at most one crossing.
struct LevelScan {
  std::vector<double> xs, hs;
  std::function<double(double)> h;
  std::function<double(double)> cum_measure;
  double x_begin = 0.0;  // domain start; classified like hs.front()

  double crossing(double lambda, double lo, double hi) const {
    // |h| - lambda changes sign on [lo, hi]
    const bool lo_above = h(lo) > lambda;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((h(mid) > lambda) == lo_above) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
  }

  double super_measure(double lambda) const {
    double total = 0.0;
    bool inside = hs.front() > lambda;
    double open = x_begin;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      const bool next_above = hs[i + 1] > lambda;
      if (inside == next_above) continue;
      const double c = crossing(lambda, xs[i], xs[i + 1]);
      if (inside)
        total += cum_measure(c) - cum_measure(open);
      else
        open = c;
      inside = next_above;
    }
    if (inside) total += cum_measure(xs.back()) - cum_measure(open);
    return total;
  }
};

// Build u* from a scanner.  The level ladder is geometric in (vmax - lam)
// near the top (where a smooth maximum makes the measure vary fastest)
// and geometric in lam below vmax/2.  When the measure jumps between
// consecutive levels (u* has a flat piece: h has a level set of positive
// measure), a bisection in lambda locates the plateau value and both of
// its endpoints are recorded, so discontinuities of u* stay sharp.
Profile rearrange_from_scan(const LevelScan& scan, double vmax) {
  if (!(vmax > 0.0)) return Profile::zero();
  std::vector<double> levels;
  const int n_top = 256, n_low = 256;
  for (int k = 0; k < n_top; ++k) {
    const double gap = 1e-9 * std::exp(std::log(0.5 / 1e-9) * k / (n_top - 1.0));
    levels.push_back(vmax * (1.0 - gap));
  }
  for (int k = 1; k <= n_low; ++k)
    levels.push_back(0.5 * vmax * std::exp(std::log(2e-8) * k / n_low));

  std::vector<double> ts, vs;
  ts.reserve(levels.size() + 32);
  vs.reserve(levels.size() + 32);
  bool plateau_marked = false;
  auto record = [&](double mu, double lam) {
    if (!(mu > 0.0)) return;
    if (!ts.empty() && mu <= ts.back() * (1.0 + 1e-12)) {
      // u* is flat up to ts.back(): pin the left end of the plateau once,
      // then let the value at the jump point itself drop (right-continuity)
      if (!plateau_marked && lam < vs.back()) {
        const double t_end = ts.back(), v_left = vs.back();
        ts.back() = t_end * (1.0 - 1e-9);
        vs.back() = v_left;
        ts.push_back(t_end);
        vs.push_back(lam);
        plateau_marked = true;
      } else {
        vs.back() = std::min(vs.back(), lam);
      }
      return;
    }
    ts.push_back(mu);
    vs.push_back(lam);
    plateau_marked = false;
  };
  for (double lam : levels) {
    const double mu = scan.super_measure(lam);
    if (!(mu > 0.0)) continue;
    const bool growth = !ts.empty() && mu > ts.back() * (1.0 + 1e-12);
    if (growth && (plateau_marked || mu > 1.5 * ts.back())) {
      // jump in the measure: bisect for the plateau value lam*
      const double mu_prev = ts.back();
      double hi = vs.back(), lo = lam, mu_lo = mu;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double mu_mid = scan.super_measure(mid);
        if (mu_mid > mu_prev * (1.0 + 1e-12)) {
          lo = mid;
          mu_lo = mu_mid;
        } else {
          hi = mid;
        }
      }
      record(scan.super_measure(hi), hi);     // upper end of the plateau
      record(mu_lo * (1.0 - 1e-9), lo);       // lower end, just inside
    }
    record(mu, lam);
  }
  if (ts.size() < 4) {
    // essentially a step function
    if (ts.empty()) return Profile::zero();
    return Profile::step(ts, vs);
  }
  std::vector<double> lxs(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) lxs[i] = std::log(ts[i]);
  Profile out;
  out.nonincreasing = true;
  out.breaks = {ts.back()};
  out.pieces.assign(2, Piece{});
  out.pieces[0].table = SampleTable::build(std::move(lxs), std::move(vs), 0.0, 0.0);
  return out;
}

// Locate the maximum of |h|, polished by ternary search in the cells
// bracketing the best sample, and insert the polished point into the
// sample grid so that narrow peaks are not skipped over by the level scan.
double polish_max(LevelScan& scan) {
  size_t imax = 0;
  for (size_t i = 1; i < scan.xs.size(); ++i)
    if (scan.hs[i] > scan.hs[imax]) imax = i;
  double lo = (imax == 0) ? scan.x_begin : scan.xs[imax - 1];
  double hi = (imax + 1 < scan.xs.size()) ? scan.xs[imax + 1] : scan.xs[imax];
  double best = scan.hs[imax], x_best = scan.xs[imax];
  for (int it = 0; it < 80; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    const double f1 = scan.h(m1), f2 = scan.h(m2);
    if (f1 > best) { best = f1; x_best = m1; }
    if (f2 > best) { best = f2; x_best = m2; }
    if (f1 < f2) lo = m1; else hi = m2;
  }
  const auto pos = std::upper_bound(scan.xs.begin(), scan.xs.end(), x_best);
  scan.hs.insert(scan.hs.begin() + (pos - scan.xs.begin()), best);
  scan.xs.insert(pos, x_best);
  return best;
}

LevelScan radial_scan(const WeightedRadialFunction& w, int samples) {
  if (!std::isfinite(w.support_radius))
    throw std::domain_error(
        "rearrange: non-monotone input needs finite support radius");
  LevelScan scan;
  const double R = w.support_radius;
  scan.xs.resize(samples);
  scan.hs.resize(samples);
  for (int i = 0; i < samples; ++i) {
    scan.xs[i] = R * (i + 1.0) / samples;
    scan.hs[i] = std::abs(w.value(scan.xs[i]));
  }
  auto fn = w.value;
  scan.h = [fn](double rho) { return std::abs(fn(rho)); };
  const SpaceParams space = w.space;
  scan.cum_measure = [space](double rho) { return ball_volume(space, rho); };
  scan.x_begin = 0.0;
  return scan;
}

}  // namespace

WeightedRadialFunction WeightedRadialFunction::step(
    const SpaceParams& space, std::vector<double> rho_edges,
    std::vector<double> levels) {
  if (rho_edges.size() != levels.size() || rho_edges.empty())
    throw std::invalid_argument("WeightedRadialFunction::step: size mismatch");
  for (size_t i = 0; i < rho_edges.size(); ++i)
    if (!(rho_edges[i] > (i ? rho_edges[i - 1] : 0.0)))
      throw std::invalid_argument(
          "WeightedRadialFunction::step: edges must increase");
  WeightedRadialFunction w;
  w.space = space;
  w.rho_edges = std::move(rho_edges);
  w.levels = std::move(levels);
  w.support_radius = w.rho_edges.back();
  auto edges = w.rho_edges;
  auto vals = w.levels;
  w.value = [edges, vals](double rho) {
    const size_t i =
        std::upper_bound(edges.begin(), edges.end(), rho) - edges.begin();
    return i < vals.size() ? vals[i] : 0.0;
  };
  bool noninc = true;
  for (size_t i = 1; i < w.levels.size(); ++i)
    if (std::abs(w.levels[i]) > std::abs(w.levels[i - 1])) noninc = false;
  w.nonincreasing = noninc;
  return w;
}

WeightedRadialFunction WeightedRadialFunction::smooth(
    const SpaceParams& space, std::function<double(double)> fn,
    double support_radius, bool nonincreasing) {
  WeightedRadialFunction w;
  w.space = space;
  w.value = std::move(fn);
  w.support_radius = support_radius;
  w.nonincreasing = nonincreasing;
  return w;
}

double distribution(const WeightedRadialFunction& w, double lambda) {
  if (lambda < 0.0) throw std::domain_error("distribution: lambda must be >= 0");
  if (w.is_step()) {
    double total = 0.0;
    for (size_t i = 0; i < w.levels.size(); ++i) {
      if (!(std::abs(w.levels[i]) > lambda)) continue;
      const double lo = i ? w.rho_edges[i - 1] : 0.0;
      total += ball_volume(w.space, w.rho_edges[i]) - ball_volume(w.space, lo);
    }
    return total;
  }
  if (w.nonincreasing) {
    // superlevel set is the ball where |w| > lambda
    if (!(std::abs(w.value(1e-9)) > lambda)) return 0.0;
    double hi = 1.0;
    const double rho_cap =
        std::isfinite(w.support_radius) ? w.support_radius : 500.0;
    while (hi < rho_cap && std::abs(w.value(hi)) > lambda) hi *= 2.0;
    hi = std::min(hi, rho_cap);
    if (std::abs(w.value(hi)) > lambda) {
      if (!std::isfinite(w.support_radius)) return kInf;
      return ball_volume(w.space, w.support_radius);
    }
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (std::abs(w.value(mid)) > lambda) lo = mid; else hi = mid;
    }
    return ball_volume(w.space, 0.5 * (lo + hi));
  }
  if (lambda == 0.0 && std::isfinite(w.support_radius)) {
    // measure of {|w| > 0} within the support; scan at a tiny level
    LevelScan scan = radial_scan(w, 4096);
    const double vmax = polish_max(scan);
    return vmax > 0.0 ? scan.super_measure(vmax * 1e-14) : 0.0;
  }
  LevelScan scan = radial_scan(w, 4096);
  return scan.super_measure(lambda);
}

Profile rearrange(const WeightedRadialFunction& w) {
  if (w.is_step()) {
    std::vector<double> lam(w.levels.size());
    for (size_t i = 0; i < lam.size(); ++i) lam[i] = std::abs(w.levels[i]);
    std::vector<double> sorted = lam;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    while (!sorted.empty() && sorted.back() == 0.0) sorted.pop_back();
    if (sorted.empty()) return Profile::zero();
    std::vector<double> edges, values;
    for (double v : sorted) {
      // measure of {|w| >= v}
      double mu = 0.0;
      for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < v) continue;
        const double lo = i ? w.rho_edges[i - 1] : 0.0;
        mu += ball_volume(w.space, w.rho_edges[i]) - ball_volume(w.space, lo);
      }
      edges.push_back(mu);
      values.push_back(v);
    }
    return Profile::step(edges, values);
  }
  if (w.nonincreasing) {
    const SpaceParams space = w.space;
    auto fn = w.value;
    Profile out;
    out.nonincreasing = true;
    auto composed = [space, fn](double t) {
      return std::abs(fn(inverse_volume(space, t)));
    };
    if (std::isfinite(w.support_radius)) {
      const double t_supp = ball_volume(space, w.support_radius);
      out.breaks = {t_supp};
      out.pieces.assign(2, Piece{});
      out.pieces[0].fn = composed;
    } else {
      out.pieces[0].fn = composed;
      // estimate the decay exponent from the far log-slope
      const double t1 = 1e8, t2 = 1e10;
      const double v1 = composed(t1), v2 = composed(t2);
      out.fn_tail_expo = (v1 > 0.0 && v2 > 0.0)
                             ? std::log(v2 / v1) / std::log(t2 / t1)
                             : -1.0;
    }
    return out;
  }
  LevelScan scan = radial_scan(w, 4096);
  return rearrange_from_scan(scan, polish_max(scan));
}

Profile rearrange_lebesgue(const std::function<double(double)>& h,
                           double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::domain_error("rearrange_lebesgue: t_max must be finite and > 0");
  LevelScan scan;
  const int samples = 4096;
  const double lx0 = std::log(t_max) + std::log(1e-10);
  const double lx1 = std::log(t_max);
  scan.xs.resize(samples);
  scan.hs.resize(samples);
  for (int i = 0; i < samples; ++i) {
    scan.xs[i] = std::exp(lx0 + (lx1 - lx0) * i / (samples - 1.0));
    scan.hs[i] = std::abs(h(scan.xs[i]));
  }
  scan.h = [&h](double t) { return std::abs(h(t)); };
  scan.cum_measure = [](double t) { return t; };
  scan.x_begin = 0.0;
  return rearrange_from_scan(scan, polish_max(scan));
}

}  // namespace hv
