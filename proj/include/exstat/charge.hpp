#pragma once

#include "exstat/genfun.hpp"

namespace exstat {

/// Central-charge input: a statistics family plus the scattering parameter
/// Phi >= 0 (kept abstract; nu = g + Phi drives the Haldane-Wu closed form).
struct ChargeProblem {
  Statistics stat;
  double phi = 0.0;

  ChargeProblem(Statistics s, double phi_) : stat(s), phi(phi_) {
    if (!(phi >= 0.0)) throw DomainError("ChargeProblem: requires phi >= 0");
  }
  /// g + Phi; Haldane-Wu only.
  double nu() const { return stat.g() + phi; }
};

/// Output of the two-route computation. residual = |c_integral - c_closed|
/// is a first-class field: the equivalence of the routes is the main
/// verified claim. y_link_residual checks y0 = 1 - 1/f(x0) for Haldane-Wu
/// (identically 0 for Gentile, where y0 simply stores 1 - 1/F(x0)).
struct ChargeResult {
  double x0 = 1.0;
  double y0 = 1.0;
  double c_integral = 0.0;
  double c_closed = 0.0;
  double residual = 0.0;
  double y_link_residual = 0.0;
};

/// Root in (0, 1] of ln x + Phi ln f(x) = 0; exactly 1 when Phi = 0.
double solve_x0(const ChargeProblem& prob, const Tolerances& tol = {});

/// Root in (0, 1] of ln y = nu ln(1-y); exactly 1 when nu = 0 (bosons).
double solve_y0(double nu, const Tolerances& tol = {});

/// Effective central charge by the generic integral route:
/// (6/pi^2) [ integral_0^{x0} ln f(t)/t dt - (1/2) ln x0 ln f(x0) ].
/// The (g=0, Phi=0) boson corner is taken as the x0 -> 1 limit via
/// Richardson extrapolation over x0 = 1-1e-6 and 1-1e-7.
double charge_integral(const ChargeProblem& prob, const Tolerances& tol = {});

/// Closed dilogarithm forms: (6/pi^2) L(y0) for Haldane-Wu with
/// y0 = solve_y0(g + Phi); (6/pi^2) [L(x0) - L(x0^{G+1})/(G+1)] for Gentile.
double charge_closed(const ChargeProblem& prob, const Tolerances& tol = {});

/// Both routes plus the intermediate-identity check.
ChargeResult charge_both(const ChargeProblem& prob, const Tolerances& tol = {});

}  // namespace exstat
