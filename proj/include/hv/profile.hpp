#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <vector>

namespace hv {

/// coef * t^expo * (ln t)^log_pow
struct Term {
  double coef = 0.0;
  double expo = 0.0;
  int log_pow = 0;
};

/// Monotone cubic (pchip) sample table in x = ln t, with power-law
/// extrapolation beyond both ends.  Values are stored in log scale when
/// they are all positive.
struct SampleTable {
  std::vector<double> x;      // ln t, strictly increasing
  std::vector<double> y;      // value, or ln(value) when log_scale
  std::vector<double> slope;  // pchip slopes dy/dx
  bool log_scale = false;
  double head_expo = 0.0;  // value ~ v(x0) * (t/t0)^head_expo below x0
  double tail_expo = 0.0;  // value ~ v(xN) * (t/tN)^tail_expo above xN

  static std::shared_ptr<const SampleTable> build(std::vector<double> log_t,
                                                  std::vector<double> values,
                                                  double head_expo,
                                                  double tail_expo);
  double eval_logt(double lx) const;
};

/// One piece of a Profile.  Exactly one representation is active:
/// analytic terms (default), a sample table, or a raw callable.
struct Piece {
  std::vector<Term> terms;
  std::shared_ptr<const SampleTable> table;
  std::function<double(double)> fn;

  bool analytic() const { return !table && !fn; }
  bool is_zero() const { return analytic() && terms.empty(); }
  bool single_power() const {
    return analytic() &&
           (terms.empty() || (terms.size() == 1 && terms[0].log_pow == 0));
  }
  double eval(double t) const;
};

/// A real function of the volume variable t on (0, inf), piecewise
/// defined between breakpoints.  Piece i covers [b_i, b_{i+1}) with
/// b_0 = 0 and b_{K+1} = inf (evaluation at a breakpoint returns the
/// right limit, matching right-continuity of rearrangements).
class Profile {
 public:
  std::vector<double> breaks;  // interior breakpoints, strictly increasing
  std::vector<Piece> pieces;   // breaks.size() + 1 entries
  bool nonincreasing = false;
  double fn_head_expo = 0.0;  // head/tail behavior when the first/last
  double fn_tail_expo = 0.0;  // piece is a raw callable

  Profile() : pieces(1) {}  // identically zero

  double operator()(double t) const;

  static Profile zero();
  static Profile constant(double c);
  static Profile power(double c, double alpha);
  /// values[i] on [edges[i-1], edges[i]), zero beyond edges.back()
  static Profile step(const std::vector<double>& edges,
                      const std::vector<double>& values);

  /// Decay exponent of the last piece as t -> inf; -inf when the profile
  /// has compact support.
  double tail_exponent() const;
  /// Growth exponent of the first piece as t -> 0.
  double head_exponent() const;

  void save(std::ostream& os) const;
  static Profile load(std::istream& is);
};

Profile scaled(const Profile& u, double c);

/// Maximal function u**(t) = (1/t) \int_0^t u(s) ds of a nonincreasing
/// nonnegative profile.  Closed-form for piecewise-analytic input,
/// tabulated otherwise.
Profile maximal(const Profile& u);

/// \int_0^inf |u(t)|^q t^{w-1} dt; +inf when divergent.
double weighted_power_integral(const Profile& u, double q, double w);

/// Lorentz quasi-norm (\int_0^inf (t^{1/p} u(t))^q dt/t)^{1/q} for a
/// nonincreasing profile; +inf when divergent.
double lorentz_quasinorm(const Profile& u, double p, double q);

}  // namespace hv
