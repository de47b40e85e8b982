#pragma once

#include <functional>

namespace hv {

/// Adaptive Gauss-Legendre integration of f over the finite interval [a, b].
/// Subdivides until the two-panel refinement agrees with the one-panel
/// estimate to rel_tol (or abs_floor for near-zero integrals).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_floor = 0.0);

/// Integral of a nonnegative function g over (0, inf).
///
/// The interval is covered by decade chunks in t, each integrated
/// adaptively in x = ln t.  Chunks are added outward from the anchor
/// window [anchor_lo, anchor_hi] until several consecutive chunks fall
/// below rel_tol times the running total.  Intended for integrands that
/// decay like powers of t at both ends.
double integrate_decades(const std::function<double(double)>& g,
                         double anchor_lo, double anchor_hi,
                         double rel_tol = 1e-12);

}  // namespace hv
