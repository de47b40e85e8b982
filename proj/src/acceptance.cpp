#include "hv/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "hv/constants.hpp"
#include "hv/geometry.hpp"
#include "hv/profile.hpp"
#include "hv/report.hpp"
#include "hv/sharpness.hpp"
#include "hv/verifier.hpp"

namespace hv {
namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out(count);
  const double a = std::log(lo), b = std::log(hi);
  for (int j = 0; j < count; ++j)
    out[j] = std::exp(a + (b - a) * j / (count - 1.0));
  return out;
}

Profile random_noninc_step(std::mt19937& rng, int max_steps) {
  std::uniform_int_distribution<int> nsteps(1, max_steps);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int k = nsteps(rng);
  std::vector<double> edges(k), values(k);
  for (int i = 0; i < k; ++i) {
    edges[i] = std::pow(10.0, -3.0 + 6.0 * uni(rng));
    values[i] = std::pow(10.0, -2.0 + 4.0 * uni(rng));
  }
  std::sort(edges.begin(), edges.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  for (int i = 1; i < k; ++i)
    if (edges[i] <= edges[i - 1]) edges[i] = edges[i - 1] * (1.0 + 1e-6);
  return Profile::step(edges, values);
}

std::string fmt(double x) { return format_sig17(x); }

struct Check {
  bool ok = true;
  double worst = 1e300;           // most negative slack / tightest margin
  std::string note;
  void slack_at_least(double slack, double floor, const std::string& where) {
    if (slack < worst) { worst = slack; note = where; }
    if (slack < floor) ok = false;
  }
};

CriterionResult criterion_geometry_roundtrip() {
  Check c;
  const auto grid = log_grid(1e-9, 1e9, 200);
  for (int n = 2; n <= 10; ++n) {
    const SpaceParams space = SpaceParams::make(n);
    for (double t : grid) {
      const double err =
          std::abs(ball_volume(space, inverse_volume(space, t)) - t) / t;
      c.slack_at_least(1e-11 - err, 0.0,
                       "n=" + std::to_string(n) + " t=" + fmt(t));
    }
  }
  return {1, "geometry round trip", c.ok,
          "max |V(F(t))-t|/t margin " + fmt(c.worst) + " at " + c.note};
}

CriterionResult criterion_keyyeu() {
  Check c;
  const auto grid = log_grid(1e-9, 1e9, 200);
  for (int n = 2; n <= 10; ++n)
    for (const auto& r : check_keyyeu(n, grid))
      c.slack_at_least(r.lhs, 1e-300, r.function + " n=" + std::to_string(n));
  return {2, "eq:keyyeu", c.ok,
          "min gap n log sinh F - ln(t/sigma_n) = " + fmt(c.worst) + " at " +
              c.note};
}

CriterionResult criterion_keyest() {
  Check c;
  const auto grid = log_grid(1e-9, 1e9, 300);
  for (int n : {2, 3, 5, 8}) {
    for (double q : {2.0 * n / (n - 1.0), 4.0, 10.0}) {
      const auto rows = check_keyest(n, q, grid, 1e-9);
      for (const auto& r : rows)
        c.slack_at_least(r.rel_slack, -1e-9,
                         "n=" + std::to_string(n) + " q=" + fmt(q) + " " +
                             r.function);
      const double ratio = rows.front().rhs / rows.front().lhs;
      if (ratio < 0.999) {
        c.ok = false;
        c.note = "small-t ratio " + fmt(ratio) + " at n=" + std::to_string(n) +
                 " q=" + fmt(q);
      }
    }
  }
  return {3, "eq:keyest", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note};
}

CriterionResult criterion_phi() {
  Check c;
  std::string lim_note;
  bool lim_ok = true;
  double lim_worst = 1.0;
  const auto grid = log_grid(1e-9, 1e9, 200);
  for (int n = 2; n <= 10; ++n) {
    const SpaceParams space = SpaceParams::make(n);
    for (const auto& r : check_phi_monotone(n, grid))
      c.slack_at_least(r.abs_slack, 1e-300, "n=" + std::to_string(n));
    const double ratio =
        phi(space, 1e10) * (n - 1) / (space.n * space.sigma_n);
    if (ratio < lim_worst) {
      lim_worst = ratio;
      lim_note = "n=" + std::to_string(n);
    }
    if (!(ratio >= 0.999 && ratio <= 1.0)) lim_ok = false;
  }
  return {4, "Proposition ddtang", c.ok && lim_ok,
          "phi strictly increasing: " + std::string(c.ok ? "yes" : "NO") +
              "; min phi(1e10)(n-1)/(n sigma_n) = " + fmt(lim_worst) +
              " at " + lim_note + " (band [0.999, 1])"};
}

CriterionResult criterion_hardy_maximal() {
  Check c;
  std::mt19937 rng(20240811u);
  const std::vector<std::pair<double, double>> pqs = {
      {2, 2}, {2, 3}, {3, 2}, {1.5, 4}};
  for (int trial = 0; trial < 100; ++trial) {
    const Profile u = random_noninc_step(rng, 20);
    for (auto [p, q] : pqs) {
      const auto r = check_hardy_maximal(u, p, q, 1e-10);
      c.slack_at_least(r.rel_slack, -1e-10,
                       "trial " + std::to_string(trial) + " p=" + fmt(p) +
                           " q=" + fmt(q));
    }
  }
  return {5, "eq:Hardy maximal", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note};
}

CriterionResult criterion_1d_hardy() {
  Check c;
  std::mt19937 rng(77002123u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::vector<std::pair<double, double>> pqs = {{3, 2}, {4, 2}, {2, 2}};
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 3 + static_cast<int>(uni(rng) * 8);
    std::vector<double> ts(k), ys(k);
    ts[0] = 0.0;
    for (int i = 1; i < k; ++i) ts[i] = ts[i - 1] + 0.05 + uni(rng);
    for (int i = 0; i < k; ++i) ys[i] = uni(rng) * 2.0;
    ys[k - 1] = 0.0;  // compact support
    for (auto [p, q] : pqs) {
      const auto r = check_1d_hardy(ts, ys, p, q, 1e-10);
      c.slack_at_least(r.rel_slack, -1e-10,
                       "trial " + std::to_string(trial) + " p=" + fmt(p) +
                           " q=" + fmt(q));
    }
  }
  const auto closed = check_1d_hardy({0.0, 1.0}, {1.0, 0.0}, 3.0, 2.0, 1e-12);
  const bool exact = std::abs(closed.lhs - 1.0 / 3.0) <= 1e-12 &&
                     std::abs(closed.rhs - 1.0 / 12.0) <= 1e-12;
  if (!exact) c.ok = false;
  return {6, "eq:1DHardy", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note +
              "; closed form lhs=" + fmt(closed.lhs) +
              " rhs=" + fmt(closed.rhs)};
}

CriterionResult criterion_poincare() {
  Check c;
  const std::vector<std::string> fns = {"bump(1,3)", "bump(2,4)",
                                        "plateau(0.5,1.5)"};
  const std::vector<std::array<double, 4>> tuples = {
      {3, 1, 2, 2}, {3, 2, 2, 2}, {5, 2, 2, 3}, {4, 3, 2, 2}};
  for (const auto& f : fns) {
    const SmoothRadialFunction u = parse_radial_function(f);
    for (const auto& tp : tuples) {
      const auto r = check_poincare(u, f, static_cast<int>(tp[0]),
                                    static_cast<int>(tp[1]), tp[2], tp[3]);
      c.slack_at_least(r.rel_slack, -1e-8,
                       f + " (n,m,p,q)=(" + fmt(tp[0]) + "," + fmt(tp[1]) +
                           "," + fmt(tp[2]) + "," + fmt(tp[3]) + ")");
    }
  }
  const double C = poincare_constant(3, 2, 2);
  const double cross = std::pow(2.0, 4) / 16.0;  // (n-1)^4/16 at n=3
  if (C * C != cross) c.ok = false;
  return {7, "Theorem 1.1", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note +
              "; C(3,2,2)^2 = " + fmt(C * C) + " vs (n-1)^4/16 = " +
              fmt(cross)};
}

CriterionResult criterion_order2_chain() {
  Check c;
  const SmoothRadialFunction u = parse_radial_function("bump(1,4)");
  const auto rows = check_order2_chain(u, "bump(1,4)", 5, 2.0, 3.0, 1e-7);
  std::ostringstream names;
  for (const auto& r : rows) {
    c.slack_at_least(r.rel_slack, -1e-7, r.name);
    if (r.status == Status::violated) names << ' ' << r.name;
  }
  return {8, "order-2 chain", c.ok && rows.size() == 9,
          std::to_string(rows.size()) + " rows, min rel slack " +
              fmt(c.worst) + " at " + c.note + names.str()};
}

CriterionResult criterion_lorentz_ps() {
  Check c;
  const SmoothRadialFunction u = parse_radial_function("bump(1,4)");
  const std::vector<std::array<double, 4>> tuples = {
      {5, 2, 2, 3}, {7, 3, 2, 2}, {4, 1, 2, 8.0 / 3.0}};
  for (const auto& tp : tuples) {
    const auto r =
        check_poincare_sobolev(u, "bump(1,4)", static_cast<int>(tp[0]),
                               static_cast<int>(tp[1]), tp[2], tp[3], 1e-7);
    c.slack_at_least(r.rel_slack, -1e-7,
                     "(n,m,p,q)=(" + fmt(tp[0]) + "," + fmt(tp[1]) + "," +
                         fmt(tp[2]) + "," + fmt(tp[3]) + ")");
  }
  return {9, "Theorem 1.2", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note};
}

CriterionResult criterion_tnorm() {
  Check c;
  std::mt19937 rng(555019u);
  const std::vector<std::pair<double, double>> pqs = {{2, 2}, {3, 2}};
  for (int trial = 0; trial < 20; ++trial) {
    const Profile v = random_noninc_step(rng, 12);
    for (int n : {2, 3})
      for (auto [p, q] : pqs) {
        const auto r = check_tnorm(v, "step", n, p, q, 1e-8);
        c.slack_at_least(r.rel_slack, -1e-8,
                         "trial " + std::to_string(trial) +
                             " n=" + std::to_string(n) + " p=" + fmt(p) +
                             " q=" + fmt(q));
      }
  }
  return {10, "eq:Tnorm", c.ok,
          "min rel slack " + fmt(c.worst) + " at " + c.note};
}

CriterionResult criterion_sharpness() {
  bool ok = true;
  std::ostringstream detail;
  for (int m : {2, 1}) {
    double prev = 1e300;
    detail << "m=" << m << " ratios:";
    for (double R : {1e2, 1e4, 1e6}) {
      const SharpnessResult res = sharpness_experiment(3, m, 2.0, 2.0, 0.01, R);
      detail << ' ' << fmt(res.ratio);
      if (res.ratio < res.C_pow_q - 1e-8) {
        ok = false;
        detail << "(below C^q)";
      }
      if (res.ratio > prev + 1e-6) {
        ok = false;
        detail << "(not non-increasing)";
      }
      if (R == 1e6 && res.ratio > 1.25) {
        ok = false;
        detail << "(final ratio above 1.25 band)";
      }
      prev = res.ratio;
    }
    detail << "; ";
  }
  return {11, "sharpness", ok, detail.str()};
}

CriterionResult criterion_fR_closed_form() {
  Check c;
  std::mt19937 rng(909137u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = 0.1 + 5.0 * uni(rng);
    const double R = a * (2.0 + 100.0 * uni(rng));
    const double p = 1.3 + 2.0 * uni(rng);
    const double q = 1.0 + 3.0 * uni(rng);
    const double closed = fR_lorentz_identity(a, R, p, q);
    const double direct =
        std::pow(lorentz_quasinorm(make_fR(a, R, p), p, q), q);
    const double rel = std::abs(closed - direct) / closed;
    c.slack_at_least(1e-8 - rel, 0.0, "trial " + std::to_string(trial));
  }
  const double ten_thirds =
      fR_lorentz_identity(1.0, std::exp(2.0), 2.0, 2.0);
  if (std::abs(ten_thirds - 10.0 / 3.0) > 1e-12) c.ok = false;
  return {12, "fR closed form", c.ok,
          "worst margin " + fmt(c.worst) + "; identity at (2,2,1,e^2) = " +
              fmt(ten_thirds) + " vs 10/3"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::vector<CriterionResult> out;
  auto add = [&](CriterionResult r) {
    if (progress)
      *progress << "criterion " << r.index << " (" << r.name
                << "): " << (r.pass ? "pass" : "FAIL") << "  " << r.detail
                << std::endl;
    out.push_back(std::move(r));
  };
  add(criterion_geometry_roundtrip());
  add(criterion_keyyeu());
  add(criterion_keyest());
  add(criterion_phi());
  add(criterion_hardy_maximal());
  add(criterion_1d_hardy());
  add(criterion_poincare());
  add(criterion_order2_chain());
  add(criterion_lorentz_ps());
  add(criterion_tnorm());
  add(criterion_sharpness());
  add(criterion_fR_closed_form());
  const double secs =
      std::chrono::duration<double>(clock::now() - t0).count();
  add({13, "selftest runtime", secs < 300.0,
       "criteria 1-12 in " + fmt(secs) + " s (budget 300 s)"});
  return out;
}

}  // namespace hv
