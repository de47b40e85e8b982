#include "hv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hv/quadrature.hpp"

namespace hv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fritsch-Carlson monotone cubic slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  std::vector<double> h(n - 1), delta(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) s = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
    return s;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

std::shared_ptr<const SampleTable> SampleTable::build(
    std::vector<double> log_t, std::vector<double> values, double head_expo,
    double tail_expo) {
  if (log_t.size() != values.size() || log_t.size() < 2)
    throw std::invalid_argument("SampleTable: need >= 2 samples");
  auto tab = std::make_shared<SampleTable>();
  tab->x = std::move(log_t);
  tab->head_expo = head_expo;
  tab->tail_expo = tail_expo;
  bool positive = true;
  for (double v : values)
    if (!(v > 0.0)) { positive = false; break; }
  tab->log_scale = positive;
  if (positive) {
    tab->y.resize(values.size());
    for (size_t i = 0; i < values.size(); ++i) tab->y[i] = std::log(values[i]);
  } else {
    tab->y = std::move(values);
  }
  tab->slope = pchip_slopes(tab->x, tab->y);
  return tab;
}

double SampleTable::eval_logt(double lx) const {
  auto raw = [this](double yy) { return log_scale ? std::exp(yy) : yy; };
  if (lx <= x.front())
    return raw(y.front()) * std::exp(head_expo * (lx - x.front()));
  if (lx >= x.back())
    return raw(y.back()) * std::exp(tail_expo * (lx - x.back()));
  const size_t j =
      std::upper_bound(x.begin(), x.end(), lx) - x.begin() - 1;
  const double h = x[j + 1] - x[j];
  const double s = (lx - x[j]) / h;
  const double y0 = y[j], y1 = y[j + 1], d0 = slope[j] * h, d1 = slope[j + 1] * h;
  const double s2 = s * s, s3 = s2 * s;
  const double val = (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * d0 +
                     (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * d1;
  return raw(val);
}

double Piece::eval(double t) const {
  if (fn) return fn(t);
  if (table) return table->eval_logt(std::log(t));
  double v = 0.0;
  for (const Term& tm : terms) {
    double w = tm.coef * std::pow(t, tm.expo);
    for (int k = 0; k < tm.log_pow; ++k) w *= std::log(t);
    v += w;
  }
  return v;
}

double Profile::operator()(double t) const {
  if (!(t > 0.0)) throw std::domain_error("Profile: t must be > 0");
  const size_t i =
      std::upper_bound(breaks.begin(), breaks.end(), t) - breaks.begin();
  return pieces[i].eval(t);
}

Profile Profile::zero() { return Profile(); }

Profile Profile::constant(double c) {
  Profile u;
  u.pieces[0].terms = {Term{c, 0.0, 0}};
  u.nonincreasing = true;
  return u;
}

Profile Profile::power(double c, double alpha) {
  Profile u;
  u.pieces[0].terms = {Term{c, alpha, 0}};
  u.nonincreasing = (c >= 0.0 && alpha <= 0.0);
  return u;
}

Profile Profile::step(const std::vector<double>& edges,
                      const std::vector<double>& values) {
  if (edges.size() != values.size() || edges.empty())
    throw std::invalid_argument("Profile::step: size mismatch");
  for (size_t i = 0; i < edges.size(); ++i)
    if (!(edges[i] > (i ? edges[i - 1] : 0.0)))
      throw std::invalid_argument("Profile::step: edges must increase");
  Profile u;
  u.breaks = edges;
  u.pieces.assign(edges.size() + 1, Piece{});
  bool noninc = true;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) u.pieces[i].terms = {Term{values[i], 0.0, 0}};
    if (i && values[i] > values[i - 1]) noninc = false;
    if (values[i] < 0.0) noninc = false;
  }
  u.nonincreasing = noninc && values.back() >= 0.0;
  return u;
}

double Profile::tail_exponent() const {
  const Piece& p = pieces.back();
  if (p.table) return p.table->tail_expo;
  if (p.fn) return fn_tail_expo;
  if (p.terms.empty()) return -kInf;
  double e = -kInf;
  for (const Term& tm : p.terms)
    if (tm.coef != 0.0) e = std::max(e, tm.expo);
  return e;
}

double Profile::head_exponent() const {
  const Piece& p = pieces.front();
  if (p.table) return p.table->head_expo;
  if (p.fn) return fn_head_expo;
  if (p.terms.empty()) return 0.0;
  double e = kInf;
  for (const Term& tm : p.terms)
    if (tm.coef != 0.0) e = std::min(e, tm.expo);
  return std::isinf(e) ? 0.0 : e;
}

Profile scaled(const Profile& u, double c) {
  if (!(c > 0.0)) {
    if (c == 0.0) return Profile::zero();
    throw std::domain_error("scaled: factor must be >= 0");
  }
  Profile out = u;
  for (Piece& p : out.pieces) {
    if (p.fn) {
      auto f = p.fn;
      p.fn = [f, c](double t) { return c * f(t); };
    } else if (p.table) {
      auto tab = std::make_shared<SampleTable>(*p.table);
      if (tab->log_scale) {
        const double lc = std::log(c);
        for (double& yy : tab->y) yy += lc;
      } else {
        for (double& yy : tab->y) yy *= c;
        for (double& ss : tab->slope) ss *= c;
      }
      p.table = tab;
    } else {
      for (Term& tm : p.terms) tm.coef *= c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// maximal function

namespace {

// \int_lo^hi c t^alpha dt, lo >= 0, hi finite
double power_antiderivative(double c, double alpha, double lo, double hi) {
  if (c == 0.0) return 0.0;
  if (alpha == -1.0) {
    if (lo == 0.0) throw std::domain_error("maximal: non-integrable at 0");
    return c * std::log(hi / lo);
  }
  const double e = alpha + 1.0;
  const double lo_pow = (lo == 0.0) ? 0.0 : std::pow(lo, e);
  if (lo == 0.0 && e <= 0.0)
    throw std::domain_error("maximal: non-integrable at 0");
  return c * (std::pow(hi, e) - lo_pow) / e;
}

bool fully_analytic(const Profile& u) {
  for (const Piece& p : u.pieces) {
    if (!p.analytic()) return false;
    for (const Term& tm : p.terms)
      if (tm.log_pow != 0) return false;
  }
  return true;
}

Profile maximal_analytic(const Profile& u) {
  Profile out;
  out.breaks = u.breaks;
  out.pieces.assign(u.pieces.size(), Piece{});
  out.nonincreasing = true;
  double cum = 0.0;  // \int_0^{b_i} u
  for (size_t i = 0; i < u.pieces.size(); ++i) {
    const double lo = (i == 0) ? 0.0 : u.breaks[i - 1];
    const double hi = (i < u.breaks.size()) ? u.breaks[i] : kInf;
    std::vector<Term>& terms = out.pieces[i].terms;
    double inv_coef = cum;  // coefficient of t^{-1}
    for (const Term& tm : u.pieces[i].terms) {
      if (tm.coef == 0.0) continue;
      if (tm.expo == -1.0) {
        if (lo == 0.0) throw std::domain_error("maximal: non-integrable at 0");
        terms.push_back(Term{tm.coef, -1.0, 1});
        inv_coef -= tm.coef * std::log(lo);
      } else {
        const double e = tm.expo + 1.0;
        if (lo == 0.0 && e <= 0.0)
          throw std::domain_error("maximal: non-integrable at 0");
        terms.push_back(Term{tm.coef / e, tm.expo, 0});
        inv_coef -= (lo == 0.0) ? 0.0 : tm.coef * std::pow(lo, e) / e;
      }
    }
    if (inv_coef != 0.0) terms.push_back(Term{inv_coef, -1.0, 0});
    if (std::isfinite(hi))
      for (const Term& tm : u.pieces[i].terms)
        cum += power_antiderivative(tm.coef, tm.expo, lo, hi);
  }
  return out;
}

Profile maximal_tabulated(const Profile& u) {
  const double e0 = u.head_exponent();
  if (e0 <= -1.0) throw std::domain_error("maximal: non-integrable at 0");
  const double t_first = u.breaks.empty() ? 1.0 : u.breaks.front();
  const double t_last = u.breaks.empty() ? 1.0 : u.breaks.back();
  const bool compact = std::isinf(u.tail_exponent()) && u.tail_exponent() < 0;
  const double t_lo = t_first * 1e-6;
  const double t_hi = compact ? t_last : t_last * 1e6;

  // log grid plus the profile's own breakpoints
  std::vector<double> grid;
  const int per_decade = 48;
  const double lx0 = std::log(t_lo), lx1 = std::log(t_hi);
  const int npts = std::max(64, static_cast<int>((lx1 - lx0) / M_LN10 * per_decade));
  for (int j = 0; j <= npts; ++j)
    grid.push_back(std::exp(lx0 + (lx1 - lx0) * j / npts));
  for (double b : u.breaks)
    if (b > t_lo * (1 + 1e-12) && b < t_hi * (1 - 1e-12)) grid.push_back(b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // head integral \int_0^{t_lo}
  double cum;
  if (u.pieces.front().analytic()) {
    cum = 0.0;
    for (const Term& tm : u.pieces.front().terms)
      cum += power_antiderivative(tm.coef, tm.expo, 0.0, t_lo);
  } else {
    cum = u(t_lo) * t_lo / (1.0 + e0);
  }

  std::vector<double> lxs, vals;
  lxs.reserve(grid.size());
  vals.reserve(grid.size());
  lxs.push_back(std::log(grid[0]));
  vals.push_back(cum / grid[0]);
  for (size_t j = 1; j < grid.size(); ++j) {
    cum += integrate(
        [&u](double x) {
          const double t = std::exp(x);
          return u(t) * t;
        },
        std::log(grid[j - 1]), std::log(grid[j]), 1e-11);
    lxs.push_back(std::log(grid[j]));
    vals.push_back(cum / grid[j]);
  }

  Profile out;
  out.nonincreasing = true;
  out.breaks = {t_hi};
  out.pieces.assign(2, Piece{});
  out.pieces[0].table = SampleTable::build(lxs, vals, std::min(e0, 0.0), 0.0);
  if (compact) {
    out.pieces[1].terms = {Term{cum, -1.0, 0}};
  } else {
    const double e = u.tail_exponent();
    const double c_tail = u(t_hi);
    const double total_at_hi = cum;
    out.pieces[1].fn = [e, c_tail, t_hi, total_at_hi](double t) {
      double extra;
      if (e == -1.0)
        extra = c_tail * t_hi * std::log(t / t_hi);
      else
        extra = c_tail * std::pow(t_hi, -e) *
                (std::pow(t, e + 1.0) - std::pow(t_hi, e + 1.0)) / (e + 1.0);
      return (total_at_hi + extra) / t;
    };
    out.fn_tail_expo = (e > -1.0) ? e : -0.999;
  }
  return out;
}

}  // namespace

Profile maximal(const Profile& u) {
  if (!u.nonincreasing)
    throw std::domain_error("maximal: profile must be flagged nonincreasing");
  if (fully_analytic(u)) return maximal_analytic(u);
  return maximal_tabulated(u);
}

// ---------------------------------------------------------------------------
// weighted power integrals

namespace {

double single_power_integral(double c, double alpha, double q, double w,
                             double a, double b) {
  if (c == 0.0) return 0.0;
  const double C = std::pow(std::abs(c), q);
  const double E = q * alpha + w;
  if (E == 0.0) {
    if (a == 0.0 || std::isinf(b)) return kInf;
    return C * std::log(b / a);
  }
  double hi, lo;
  if (std::isinf(b)) {
    if (E > 0.0) return kInf;
    hi = 0.0;
  } else {
    hi = std::pow(b, E);
  }
  if (a == 0.0) {
    if (E < 0.0) return kInf;
    lo = 0.0;
  } else {
    lo = std::pow(a, E);
  }
  if (a > 0.0 && std::isfinite(b))
    // cancellation-free when E is tiny (e.g. rounding residue of an exact zero)
    return C * lo * std::expm1(E * std::log(b / a)) / E;
  return C * (hi - lo) / E;
}

// chunked integration of f(x) dx marching in direction dir from x0;
// returns the contribution (kInf when apparently divergent)
double march_chunks(const std::function<double(double)>& fx, double x0, int dir,
                    double x_limit, double ref_scale) {
  // Convergence toward the open end is established from the piece's
  // growth/decay exponent before this is called, so chunks may rise
  // toward an interior peak without signalling divergence.
  double total = 0.0;
  int quiet = 0;
  double x = x0;
  const double step = M_LN10;
  for (int k = 0; k < 400; ++k) {
    if ((dir > 0 && x >= x_limit) || (dir < 0 && x <= x_limit)) break;
    double xa = (dir > 0) ? x : x - step;
    double xb = (dir > 0) ? x + step : x;
    if (dir > 0 && xb > x_limit) xb = x_limit;
    if (dir < 0 && xa < x_limit) xa = x_limit;
    const double chunk = integrate(fx, xa, xb, 1e-12);
    total += chunk;
    const double scale = std::max(std::abs(total), ref_scale);
    if (std::abs(chunk) <= 1e-15 * scale) {
      if (++quiet >= 3) return total;
    } else {
      quiet = 0;
    }
    x += dir * step;
  }
  return total;
}

}  // namespace

double weighted_power_integral(const Profile& u, double q, double w) {
  if (!(q > 0.0)) throw std::domain_error("weighted_power_integral: q must be > 0");
  double total = 0.0;
  for (size_t i = 0; i < u.pieces.size(); ++i) {
    const Piece& p = u.pieces[i];
    const double a = (i == 0) ? 0.0 : u.breaks[i - 1];
    const double b = (i < u.breaks.size()) ? u.breaks[i] : kInf;
    double contrib = 0.0;
    if (p.is_zero()) continue;
    if (p.single_power()) {
      contrib = single_power_integral(p.terms[0].coef, p.terms[0].expo, q, w, a, b);
    } else {
      auto fx = [&p, q, w](double x) {
        const double t = std::exp(x);
        return std::pow(std::abs(p.eval(t)), q) * std::exp(w * x);
      };
      // integrability toward an open end is decided from the head/tail
      // exponent (the dominant power of the outermost piece)
      if (a == 0.0 && !(q * u.head_exponent() + w > 0.0)) return kInf;
      if (std::isinf(b)) {
        const double te = u.tail_exponent();
        if (!(std::isinf(te) && te < 0.0) && !(q * te + w < 0.0)) return kInf;
      }
      if (a > 0.0 && std::isfinite(b)) {
        contrib = integrate(fx, std::log(a), std::log(b), 1e-12);
      } else if (a == 0.0 && std::isfinite(b)) {
        contrib = march_chunks(fx, std::log(b), -1, std::log(1e-300),
                               std::abs(total));
      } else {  // b == inf
        const double xa = (a > 0.0) ? std::log(a) : std::log(1e-12);
        if (a == 0.0) {
          contrib = march_chunks(fx, xa, -1, std::log(1e-300), std::abs(total));
          total += contrib;
          contrib = 0.0;
        }
        contrib += march_chunks(fx, xa, +1, std::log(1e300),
                                std::abs(total));
      }
    }
    if (std::isinf(contrib)) return kInf;
    total += contrib;
  }
  return total;
}

double lorentz_quasinorm(const Profile& u, double p, double q) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::domain_error("lorentz_quasinorm: need 1 < p < inf (p = inf unsupported)");
  if (!(q >= 1.0) || std::isinf(q))
    throw std::domain_error("lorentz_quasinorm: need 1 <= q < inf");
  const double I = weighted_power_integral(u, q, q / p);
  return std::isinf(I) ? kInf : std::pow(I, 1.0 / q);
}

// ---------------------------------------------------------------------------
// serialization

void Profile::save(std::ostream& os) const {
  os << "# profile nonincreasing " << (nonincreasing ? 1 : 0) << "\n";
  for (size_t i = 0; i < pieces.size(); ++i) {
    const double a = (i == 0) ? 0.0 : breaks[i - 1];
    const bool last = (i + 1 == pieces.size());
    const Piece& p = pieces[i];
    os.precision(17);
    os << a << ' ';
    if (last) os << "inf"; else os << breaks[i];
    if (p.fn) throw std::runtime_error("Profile::save: callable piece not serializable");
    if (p.table) {
      os << " table " << p.table->x.size() << ' ' << p.table->head_expo << ' '
         << p.table->tail_expo;
      for (size_t j = 0; j < p.table->x.size(); ++j) {
        const double v = p.table->log_scale ? std::exp(p.table->y[j]) : p.table->y[j];
        os << ' ' << p.table->x[j] << ' ' << v;
      }
    } else if (p.terms.empty()) {
      os << " zero";
    } else if (p.terms.size() == 1 && p.terms[0].log_pow == 0 &&
               p.terms[0].expo == 0.0) {
      os << " const " << p.terms[0].coef;
    } else if (p.terms.size() == 1 && p.terms[0].log_pow == 0) {
      os << " power " << p.terms[0].coef << ' ' << p.terms[0].expo;
    } else {
      os << " terms " << p.terms.size();
      for (const Term& tm : p.terms)
        os << ' ' << tm.coef << ' ' << tm.expo << ' ' << tm.log_pow;
    }
    os << '\n';
  }
}

Profile Profile::load(std::istream& is) {
  Profile u;
  u.pieces.clear();
  std::string line;
  bool noninc = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key, sub;
      hs >> key >> sub;
      if (key == "profile" && sub == "nonincreasing") {
        int v = 0;
        hs >> v;
        noninc = (v != 0);
      }
      continue;
    }
    std::istringstream ls(line);
    std::string lo_s, hi_s, kind;
    if (!(ls >> lo_s >> hi_s >> kind))
      throw std::invalid_argument("Profile::load: malformed line: " + line);
    const double hi = (hi_s == "inf") ? kInf : std::stod(hi_s);
    Piece p;
    if (kind == "zero") {
    } else if (kind == "const") {
      double c;
      ls >> c;
      if (c != 0.0) p.terms = {Term{c, 0.0, 0}};
    } else if (kind == "power") {
      double c, al;
      ls >> c >> al;
      p.terms = {Term{c, al, 0}};
    } else if (kind == "linear") {
      double c, d;
      ls >> c >> d;
      p.terms = {Term{c, 0.0, 0}, Term{d, 1.0, 0}};
    } else if (kind == "terms") {
      size_t k;
      ls >> k;
      for (size_t j = 0; j < k; ++j) {
        Term tm;
        ls >> tm.coef >> tm.expo >> tm.log_pow;
        p.terms.push_back(tm);
      }
    } else if (kind == "table") {
      size_t k;
      double he, te;
      ls >> k >> he >> te;
      std::vector<double> xs(k), vs(k);
      for (size_t j = 0; j < k; ++j) ls >> xs[j] >> vs[j];
      p.table = SampleTable::build(std::move(xs), std::move(vs), he, te);
    } else {
      throw std::invalid_argument("Profile::load: unknown kind: " + kind);
    }
    if (!ls) throw std::invalid_argument("Profile::load: malformed line: " + line);
    u.pieces.push_back(std::move(p));
    if (std::isfinite(hi)) u.breaks.push_back(hi);
  }
  if (u.pieces.empty() || u.breaks.size() + 1 != u.pieces.size())
    throw std::invalid_argument("Profile::load: inconsistent segment list");
  u.nonincreasing = noninc;
  return u;
}

}  // namespace hv
