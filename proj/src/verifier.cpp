#include "hv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hv/constants.hpp"
#include "hv/majorant.hpp"
#include "hv/quadrature.hpp"
#include "hv/rearrange.hpp"

namespace hv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_t(double t) {
  std::ostringstream os;
  os.precision(6);
  os << "t=" << t;
  return os.str();
}

bool sampled_nonincreasing(const SmoothRadialFunction& u) {
  const int N = 256;
  double prev = std::abs(u(u.support_radius * 1e-6));
  for (int i = 1; i <= N; ++i) {
    const double rho = u.support_radius * i / N;
    const double val = std::abs(u(rho));
    if (val > prev * (1.0 + 1e-12) + 1e-14) return false;
    prev = val;
  }
  return true;
}

Profile rearranged(const SmoothRadialFunction& u, const SpaceParams& space) {
  return rearrange(WeightedRadialFunction::smooth(
      space, u.f, u.support_radius, sampled_nonincreasing(u)));
}

Profile rearranged_norm(const std::function<double(double)>& w,
                        double support_radius, const SpaceParams& space) {
  return rearrange(
      WeightedRadialFunction::smooth(space, w, support_radius, false));
}

// \int_0^inf g(t) dt for a smooth positive integrand vanishing at both
// ends, anchored on the window where the mass lives.
double callable_integral(const std::function<double(double)>& g,
                         double anchor_lo, double anchor_hi) {
  return integrate_decades(g, anchor_lo, anchor_hi, 1e-10);
}

}  // namespace

std::vector<InequalityReport> check_keyest(int n, double q,
                                           const std::vector<double>& t_grid,
                                           double tol) {
  const SpaceParams space = SpaceParams::make(n);
  std::vector<InequalityReport> rows;
  rows.reserve(t_grid.size());
  const bool supported = q >= 2.0 * n / (n - 1.0) - 1e-12;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::domain_error("check_keyest: t must be > 0");
    const double lt = std::log(t / space.sigma_n);
    const double L = q * (n - 1) * log_sinh_F(space, t);
    const double A = q * (n - 1.0) / n * lt;
    const double B = q * std::log((n - 1.0) / n) + q * lt;
    const double M = std::max(A, B);
    InequalityReport r =
        make_report("keyest", n, 0, 0.0, q, fmt_t(t), std::exp(L - M),
                    std::exp(A - M) + std::exp(B - M), tol);
    if (!supported) {
      r.status = Status::unsupported;
      r.function += " [q < 2n/(n-1)]";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<InequalityReport> check_keyyeu(int n,
                                           const std::vector<double>& t_grid,
                                           double tol) {
  const SpaceParams space = SpaceParams::make(n);
  std::vector<InequalityReport> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const double gap = n * log_sinh_F(space, t) - std::log(t / space.sigma_n);
    rows.push_back(
        make_report("keyyeu", n, 0, 0.0, 0.0, fmt_t(t), gap, 0.0, tol));
    if (gap <= 0.0) rows.back().status = Status::violated;
  }
  return rows;
}

std::vector<InequalityReport> check_phi_monotone(
    int n, const std::vector<double>& t_grid, double tol) {
  const SpaceParams space = SpaceParams::make(n);
  std::vector<InequalityReport> rows;
  double prev_t = 0.0, prev_phi = 0.0;
  bool have_prev = false;
  for (double t : t_grid) {
    const double ph = phi(space, t);
    if (have_prev) {
      InequalityReport r = make_report("phi-monotone", n, 0, 0.0, 0.0,
                                       fmt_t(prev_t) + ".." + fmt_t(t), ph,
                                       prev_phi, tol);
      if (!(ph > prev_phi)) r.status = Status::violated;
      rows.push_back(std::move(r));
    }
    prev_t = t;
    prev_phi = ph;
    have_prev = true;
  }
  return rows;
}

InequalityReport check_hardy_maximal(const Profile& u, double p, double q,
                                     double tol) {
  const double lhs = p / (p - 1.0) * lorentz_quasinorm(u, p, q);
  const double rhs = lorentz_quasinorm(maximal(u), p, q);
  return make_report("hardy-maximal", 0, 0, p, q, "profile", lhs, rhs, tol);
}

InequalityReport check_1d_hardy(const std::vector<double>& knots_t,
                                const std::vector<double>& knots_y, double p,
                                double q, double tol) {
  if (knots_t.size() != knots_y.size() || knots_t.size() < 2)
    throw std::invalid_argument("check_1d_hardy: need >= 2 knots");
  if (q > p)
    return unsupported_report("1d-hardy", 0, 0, p, q, "piecewise-linear",
                              "q > p");
  double lhs = 0.0, rhs_int = 0.0;
  for (size_t i = 0; i + 1 < knots_t.size(); ++i) {
    const double a = knots_t[i], b = knots_t[i + 1];
    if (!(b > a))
      throw std::invalid_argument("check_1d_hardy: knots must increase");
    const double slope = (knots_y[i + 1] - knots_y[i]) / (b - a);
    lhs += std::pow(std::abs(slope), q) *
           (std::pow(b, p) - std::pow(a, p)) / p;
    const double y0 = knots_y[i];
    rhs_int += integrate(
        [a, y0, slope, p, q](double t) {
          return std::pow(std::abs(y0 + slope * (t - a)), q) *
                 std::pow(t, p - q - 1.0);
        },
        a, b, 1e-12);
  }
  const double rhs = std::pow((p - q) / q, q) * rhs_int;
  return make_report("1d-hardy", 0, 0, p, q, "piecewise-linear", lhs, rhs,
                     tol);
}

InequalityReport check_poincare(const SmoothRadialFunction& u,
                                const std::string& fname, int n, int m,
                                double p, double q, double tol) {
  const SpaceParams space = SpaceParams::make(n);
  const Profile u_star = rearranged(u, space);
  const Profile grad_star =
      rearranged_norm(nabla_m_norm(u, m, space), u.support_radius, space);
  const double lhs = weighted_power_integral(grad_star, q, q / p);
  const double rhs = std::pow(poincare_constant(n, m, p), q) *
                     weighted_power_integral(u_star, q, q / p);
  InequalityReport r =
      make_report("poincare", n, m, p, q, fname, lhs, rhs, tol);
  if (m % 2 == 1 && q > p) {
    r.status = Status::unsupported;
    r.function += " [odd m needs q <= p]";
  }
  return r;
}

InequalityReport check_poincare_sobolev(const SmoothRadialFunction& u,
                                        const std::string& fname, int n,
                                        int m, double p, double q,
                                        double tol) {
  const SpaceParams space = SpaceParams::make(n);
  if (!(p * m < n))
    return unsupported_report("poincare-sobolev", n, m, p, q, fname,
                              "p >= n/m");
  const ExponentSet e = ExponentSet::make(m, p, q);
  const Profile u_star = rearranged(u, space);
  const Profile grad_star =
      rearranged_norm(nabla_m_norm(u, m, space), u.support_radius, space);
  const double Np = weighted_power_integral(grad_star, q, q / p);
  const double Nu = weighted_power_integral(u_star, q, q / p);
  const double Ns = weighted_power_integral(u_star, q, q / e.p_star(n, m));
  const double lhs = Np - std::pow(poincare_constant(n, m, p), q) * Nu;
  const double rhs = std::pow(sobolev_constant(n, m, p), q) * Ns;
  InequalityReport r =
      make_report("poincare-sobolev", n, m, p, q, fname, lhs, rhs, tol);
  if (!e.sobolev_valid(n)) {
    r.status = Status::unsupported;
    r.function += " [theorem hypotheses unmet]";
  }
  return r;
}

std::vector<InequalityReport> check_order2_chain(const SmoothRadialFunction& u,
                                                 const std::string& fname,
                                                 int n, double p, double q,
                                                 double tol) {
  if (!(p > 1.0) || !(p < n))
    throw std::domain_error("check_order2_chain: need 1 < p < n");
  const SpaceParams space = SpaceParams::make(n);
  const double sig = space.sigma_n;
  const bool q_ok = q >= 2.0 * n / (n - 1.0) - 1e-12;
  const double pp = p / (p - 1.0);  // p'

  const Profile u_star = rearranged(u, space);
  const Profile f_star =
      rearranged_norm(nabla_m_norm(u, 2, space), u.support_radius, space);
  const Profile f_ss = maximal(f_star);
  const MajorantResult maj = majorant_v(f_ss, space);

  const double t_supp = ball_volume(space, u.support_radius);
  const double a_lo = std::min(1e-6, t_supp * 1e-6);
  const double a_hi = 10.0 * t_supp;

  // J(w) = int |v'|^q K^q t^{w-1} = int (t f** / K)^q t^{w-1}
  auto J = [&](double w) {
    return callable_integral(
        [&](double t) {
          const double fv = f_ss(t);
          if (fv == 0.0) return 0.0;
          const double lK = log_surface_factor(space, t);
          return std::pow(fv, q) *
                 std::exp(q * (std::log(t) - lK) + (w - 1.0) * std::log(t));
        },
        a_lo, a_hi);
  };
  // Id(w) = int |v'|^q t^{w-1} = int (t f** / K^2)^q t^{w-1}
  auto Id = [&](double w) {
    return callable_integral(
        [&](double t) {
          const double fv = f_ss(t);
          if (fv == 0.0) return 0.0;
          const double lK = log_surface_factor(space, t);
          return std::pow(fv, q) *
                 std::exp(q * (std::log(t) - 2.0 * lK) +
                          (w - 1.0) * std::log(t));
        },
        a_lo, a_hi);
  };
  auto Iv = [&](double w) { return weighted_power_integral(maj.v, q, w); };

  const double Np = weighted_power_integral(f_star, q, q / p);
  const double Nu = weighted_power_integral(u_star, q, q / p);
  const double wd = q * (1.0 / p - 1.0 / n);        // order2II3 weight
  const double wdd = q * (1.0 / p - 2.0 / n) + q;   // LSorder2* weight
  const double J0 = J(q / p);
  const double J1 = J(wd);
  const double Id1 = Id(q * (1.0 / p - 1.0 / n) + q);
  const double Id2 = Id(wdd);
  const double C2q = std::pow(poincare_constant(n, 2, p), q);

  std::vector<InequalityReport> rows;
  auto push = [&](std::string name, double lhs, double rhs, bool valid,
                  const char* why) {
    InequalityReport r =
        make_report(std::move(name), n, 2, p, q, fname, lhs, rhs, tol);
    if (!valid) {
      r.status = Status::unsupported;
      r.function += std::string(" [") + why + "]";
    }
    rows.push_back(std::move(r));
  };

  const double cI1 = std::pow((p - 1.0) / p * n * std::pow(sig, 1.0 / n), q);
  push("order2I1", Np, cI1 * J1, true, "");
  push("order2I2", Np,
       std::pow((n - 1.0) * (p - 1.0) / p, q) * J0 + cI1 * J1, q_ok,
       "q < 2n/(n-1)");
  push("order2II2", J0,
       std::pow((n - 1.0) / p, q) * Iv(q / p) +
           std::pow(n, q) * std::pow(sig, q / n) * Id1,
       q_ok, "q < 2n/(n-1)");
  push("order2II3", J1,
       std::pow((n - 1.0) * (n - p) / (n * p), q) * Iv(wd) +
           std::pow(n, q) * std::pow(sig, q / n) * Id2,
       q_ok, "q < 2n/(n-1)");
  const double cLS = std::pow(n * n * std::pow(sig, 2.0 / n) / pp, q);
  push("LSorder2*", Np, cLS * Id2, true, "");

  const bool p2_ok = 2.0 * p < n;
  double Nu2 = 0.0, S2q = 0.0;
  if (p2_ok) {
    const double p2s = n * p / (n - 2.0 * p);
    Nu2 = weighted_power_integral(u_star, q, q / p2s);
    S2q = std::pow(n * (n - 2.0 * p) / (p * pp) * std::pow(sig, 2.0 / n), q);
  }
  push("LSorder2", Np, p2_ok ? S2q * Nu2 : 0.0, p2_ok, "p >= n/2");
  push("improvedLS2", Np - C2q * Nu, cLS * Id2, q_ok, "q < 2n/(n-1)");
  push("improvedLS2a", Np - C2q * Nu, p2_ok ? S2q * Nu2 : 0.0,
       p2_ok && q_ok, "needs p < n/2 and q >= 2n/(n-1)");

  // eq:major in both senses; report the tighter one
  {
    const double l1 = Iv(q / p), r1 = Nu;
    double lhs = l1, rhs = r1;
    if (p2_ok) {
      const double p2s = n * p / (n - 2.0 * p);
      const double l2 = Iv(q / p2s), r2 = Nu2;
      const double s1 = (l1 - r1) / std::max({l1, r1, 1e-300});
      const double s2 = (l2 - r2) / std::max({l2, r2, 1e-300});
      if (s2 < s1) { lhs = l2; rhs = r2; }
    }
    push("major", lhs, rhs, true, "");
  }
  return rows;
}

InequalityReport check_tnorm(const Profile& v, const std::string& vname,
                             int n, double p, double q, double tol) {
  const SpaceParams space = SpaceParams::make(n);
  const double c = std::pow(p * p / ((p - 1.0) * (n - 1.0) * (n - 1.0)), q);
  const double lhs = c * weighted_power_integral(v, q, q / p);
  const Profile tv = apply_T(v, space);
  const double rhs = weighted_power_integral(tv, q, q / p);
  return make_report("Tnorm", n, 0, p, q, vname, lhs, rhs, tol);
}

SmoothRadialFunction parse_radial_function(const std::string& text) {
  auto args_of = [&text](const char* head) -> std::vector<double> {
    const std::string h = std::string(head) + "(";
    if (text.rfind(h, 0) != 0 || text.back() != ')') return {};
    std::vector<double> out;
    std::string inner = text.substr(h.size(), text.size() - h.size() - 1);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream is(inner);
    double x;
    while (is >> x) out.push_back(x);
    return out;
  };
  if (auto a = args_of("bump"); a.size() == 2)
    return bump(a[0], static_cast<int>(a[1]));
  if (auto a = args_of("plateau"); a.size() == 2) return plateau(a[0], a[1]);
  throw std::invalid_argument("unknown function: " + text +
                              " (expected bump(rho0,k) or plateau(r1,r2))");
}

std::vector<InequalityReport> sweep(const SweepSpec& spec) {
  auto ns = spec.ns.empty() ? std::vector<int>{3} : spec.ns;
  auto ms = spec.ms.empty() ? std::vector<int>{1} : spec.ms;
  auto ps = spec.ps.empty() ? std::vector<double>{2.0} : spec.ps;
  auto qs = spec.qs.empty() ? std::vector<double>{2.0} : spec.qs;
  auto fns = spec.functions.empty() ? std::vector<std::string>{"bump(1,3)"}
                                    : spec.functions;
  std::vector<double> ts = spec.t_grid;
  if (ts.empty())
    for (int j = 0; j < 100; ++j)
      ts.push_back(std::pow(10.0, -9.0 + 18.0 * j / 99.0));

  using Task = std::function<std::vector<InequalityReport>()>;
  std::vector<Task> tasks;
  const std::string& ineq = spec.inequality;
  const double tol = spec.tol;

  static const std::vector<std::string> order2_names = {
      "order2I1",   "order2I2",    "order2II2",   "order2II3", "LSorder2*",
      "LSorder2",   "improvedLS2", "improvedLS2a", "major"};
  const bool is_order2 =
      std::find(order2_names.begin(), order2_names.end(), ineq) !=
          order2_names.end() ||
      ineq == "order2";

  if (ineq == "keyest") {
    for (int n : ns)
      for (double q : qs)
        tasks.push_back([n, q, ts, tol] { return check_keyest(n, q, ts, tol); });
  } else if (ineq == "keyyeu") {
    for (int n : ns)
      tasks.push_back([n, ts, tol] { return check_keyyeu(n, ts, tol); });
  } else if (ineq == "phi-monotone") {
    for (int n : ns)
      tasks.push_back([n, ts, tol] { return check_phi_monotone(n, ts, tol); });
  } else if (ineq == "poincare" || ineq == "poincare-sobolev") {
    const bool ps_flag = (ineq == "poincare-sobolev");
    for (const std::string& f : fns)
      for (int n : ns)
        for (int m : ms)
          for (double p : ps)
            for (double q : qs)
              tasks.push_back([f, n, m, p, q, tol, ps_flag] {
                const SmoothRadialFunction u = parse_radial_function(f);
                return std::vector<InequalityReport>{
                    ps_flag ? check_poincare_sobolev(u, f, n, m, p, q, tol)
                            : check_poincare(u, f, n, m, p, q, tol)};
              });
  } else if (is_order2) {
    for (const std::string& f : fns)
      for (int n : ns)
        for (double p : ps)
          for (double q : qs)
            tasks.push_back([f, n, p, q, tol, ineq] {
              const SmoothRadialFunction u = parse_radial_function(f);
              auto rows = check_order2_chain(u, f, n, p, q, tol);
              if (ineq == "order2") return rows;
              std::vector<InequalityReport> keep;
              for (auto& r : rows)
                if (r.name == ineq) keep.push_back(std::move(r));
              return keep;
            });
  } else {
    throw std::invalid_argument("sweep: unknown inequality: " + ineq);
  }
  if (tasks.empty()) throw std::invalid_argument("sweep: empty grid");

  std::vector<std::vector<InequalityReport>> results(tasks.size());
  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min<int>(jobs, tasks.size()); ++j)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<InequalityReport> out;
  for (auto& part : results)
    for (auto& r : part) out.push_back(std::move(r));
  return out;
}

}  // namespace hv
