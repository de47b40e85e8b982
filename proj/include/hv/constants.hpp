#pragma once

namespace hv {

/// Exponent bookkeeping for the higher-order theorems.
struct ExponentSet {
  int m = 1;
  double p = 2.0;
  double q = 2.0;

  double p_prime() const;              // p/(p-1)
  double p_star(int n, int i) const;   // np/(n-ip), needs n - ip > 0
  bool poincare_valid() const;         // m even, or q <= p
  bool sobolev_valid(int n) const;     // p < n/m, q >= 2n/(n-1), odd: q <= p

  static ExponentSet make(int m, double p, double q);
};

/// Sharp Poincare constant C(n,m,p): ((n-1)^2/(pp'))^{m/2} for even m,
/// ((n-1)/p)((n-1)^2/(pp'))^{(m-1)/2} for odd m.
double poincare_constant(int n, int m, double p);

/// Sobolev-improvement constant S(n,m,p) (product over p_i^*); requires
/// p < n/m.
double sobolev_constant(int n, int m, double p);

/// The l = q branch of S_{n,p,q,l}: sigma_n^{1/n}(n-p)/p.  The l != q
/// branch needs an external fractional-dimension constant and is reported
/// as unsupported rather than guessed.
struct LqConstant {
  bool supported = false;
  double value = 0.0;
};
LqConstant lorentz_sobolev_constant_lq(int n, double p, double q, double l);

}  // namespace hv
