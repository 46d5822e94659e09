#pragma once

#include <functional>

#include "exstat/errors.hpp"

namespace exstat {

/// Accuracy knobs shared by the scalar kernels. Defaults leave about two
/// decades of headroom over the 1e-8 verification thresholds.
struct Tolerances {
  double root_abs = 1e-12;     // absolute residual bound for root solves
  double quad_abs = 1e-10;     // absolute quadrature error target
  double series_tail = 1e-16;  // truncation bound for series summation
  int max_iter = 200;

  void validate() const;  // throws DomainError on nonpositive fields
};

/// An interval [lo, hi] known to enclose a root: the function changes sign.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int f_lo_sign = 0;
  int f_hi_sign = 0;

  /// Evaluates `func` at both ends and records the signs.
  /// Throws NoSignChange unless lo < hi and the signs differ.
  static Bracket around(const std::function<double(double)>& func, double lo,
                        double hi);
};

/// Root of a continuous function on a sign-changing bracket. Secant (Newton
/// through the last two iterates) with bisection whenever the step would
/// leave the current bracket. Returns x with |func(x)| <= tol.root_abs.
double solve_bracketed(const std::function<double(double)>& func, Bracket bracket,
                       const Tolerances& tol = {});

/// Adaptive Gauss-Kronrod (G7,K15) quadrature of `func` over [a, b] to
/// absolute accuracy tol.quad_abs. The integrand must be finite on (a, b];
/// a removable singularity at `a` is fine as long as the caller patches
/// func(a) with the limiting value (nodes are interior, but stay safe).
double integrate(const std::function<double(double)>& func, double a, double b,
                 const Tolerances& tol = {});

/// ln Gamma(z) for z > 0. Negative arguments are the caller's business via
/// product forms; no reflection here.
double log_gamma(double z);

/// Rogers dilogarithm L(x) = sum x^n/n^2 + (1/2) ln x ln(1-x) on [0, 1],
/// with L(0) = 0 and L(1) = pi^2/6 by limit. Absolute error <= 1e-12.
double rogers_dilog(double x);

}  // namespace exstat
