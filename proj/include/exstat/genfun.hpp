#pragma once

#include <vector>

#include "exstat/numerics.hpp"

namespace exstat {

enum class Family { haldane_wu, gentile };

/// One of the two exclusion-statistics families: Haldane-Wu with parameter
/// g in [0,1] (g=1 fermions, g=0 bosons) or Gentile with order G > 0
/// (at most G particles per state; non-integer G is legal but flagged).
class Statistics {
 public:
  static Statistics haldane_wu(double g);
  static Statistics gentile(double order);

  Family family() const { return family_; }
  bool is_haldane_wu() const { return family_ == Family::haldane_wu; }
  bool is_gentile() const { return family_ == Family::gentile; }

  /// Haldane-Wu exclusion parameter; DomainError for Gentile.
  double g() const;
  /// Gentile order G; DomainError for Haldane-Wu.
  double gentile_order() const;
  /// True when this is Gentile statistics with integer order. Non-integer
  /// orders work throughout but lack the direct counting interpretation.
  bool gentile_integer_order() const;

 private:
  Statistics(Family family, double param) : family_(family), param_(param) {}
  Family family_;
  double param_;
};

enum class SeriesKind { f, log_f, f_pow_m, h_pow_m };

/// Taylor coefficients of f, ln f, f^m, or (f-1)^m around t = 0, with the
/// radius of absolute convergence attached (+inf for polynomial cases).
struct SeriesCoefficients {
  SeriesKind kind = SeriesKind::f;
  double g = 0.0;
  int m = 1;
  std::vector<double> coeffs;  // index n = 0..n_max
  double radius = 0.0;
};

/// Generating function value.
/// Haldane-Wu: unique positive root of f - 1 = t f^(1-g) for t >= 0;
/// negative t is served by the series inside the convergence radius.
/// Gentile: (1 - t^(G+1)) / (1 - t), value G+1 at t = 1.
double eval(const Statistics& stat, double t, const Tolerances& tol = {});

/// Radius of absolute convergence of the Haldane-Wu Taylor series,
/// t0 = exp(-g ln g - (1-g) ln(1-g)). Returns +inf for Gentile: the
/// generating function is entire (polynomial / rational in t), so the
/// +inf convention is used instead of an error.
double radius(const Statistics& stat);

/// Taylor coefficients by the pole-free product formulas. `m` is used by
/// the power kinds only; it must be a nonzero integer (and >= 1 for
/// h_pow_m). Non-integer powers are pointwise-only, see pow_eval.
SeriesCoefficients coefficients(const Statistics& stat, SeriesKind kind, int n_max,
                                int m = 1);

/// Horner evaluation of a truncated series. Throws OutsideRadius when
/// |t| >= radius and TailTooLarge when the last retained term is still
/// above tol.series_tail.
double eval_series(const SeriesCoefficients& series, double t,
                   const Tolerances& tol = {});

/// f_g(t) * f_{1-g}(-t) - 1, which vanishes identically. Both factors are
/// evaluated through their series; requires |t| < min(t0(g), t0(1-g)).
double duality_residual(double g, double t, const Tolerances& tol = {});

/// Pointwise m-th power exp(m ln f(t)) for arbitrary real m.
double pow_eval(const Statistics& stat, double t, double m,
                const Tolerances& tol = {});

/// The Haldane-Wu generating function as a free function of g >= 0. The
/// implicit equation keeps a unique positive solution for g > 1 as well,
/// which the reversed-majorization checks rely on (bracket [1, 1+t]).
double hw_generating_function(double g, double t, const Tolerances& tol = {});

/// log f for either family, computed cancellation-free (log1p of f - 1).
double log_eval(const Statistics& stat, double t, const Tolerances& tol = {});

}  // namespace exstat
