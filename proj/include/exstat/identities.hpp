#pragma once

#include <string>
#include <vector>

#include "exstat/charge.hpp"
#include "exstat/thermo.hpp"

namespace exstat {

/// Outcome of one identity or inequality check over a sampled grid.
/// Identities compare a max residual against a tolerance; strict
/// inequalities require a positive minimum margin. Some checks carry both
/// (an inequality sweep plus an anchor identity); `passed` then needs both.
/// Skipped reports (e.g. a Gsum point outside the convergence radius) count
/// as passed with points_checked = 0.
struct VerificationReport {
  std::string name;
  std::string grid;
  bool inequality = false;
  double max_residual = 0.0;
  double min_margin = 0.0;
  double tolerance = 0.0;
  long points_checked = 0;
  bool passed = false;
  bool skipped = false;
  std::string note;

  static VerificationReport identity(std::string name, std::string grid,
                                     double max_residual, double tolerance,
                                     long points, std::string note = {});
  static VerificationReport strict(std::string name, std::string grid,
                                   double min_margin, long points,
                                   double anchor_residual = 0.0,
                                   double anchor_tolerance = 0.0,
                                   std::string note = {});
  static VerificationReport skip(std::string name, std::string grid,
                                 std::string note);
};

/// Proposition Psum / Eq. (Gsum): the dilogarithm series with the free
/// parameter g. Sums sin(pi g n) Gamma((1-g)n) Gamma(gn) / (pi n n!) t^n at
/// t = y0 (1-y0)^{-g}, adds (phi/2) ln^2(1-y0), and compares against L(y0).
/// Returns a skipped report when t falls outside the convergence radius.
/// n_terms = 0 lets the sum run until the term envelope drops below 1e-14
/// (capped at 100000; the note then records the achieved tail).
VerificationReport verify_gsum(double g, double phi, long n_terms = 0,
                               const Tolerances& tol = {});

/// The three special-value families (nu = 2, 1, 1/2 with targets pi^2/15,
/// pi^2/12, pi^2/10), swept over g. Out-of-radius g are skipped per family.
std::vector<VerificationReport> verify_special_value_families(
    long n_terms = 0, const std::vector<double>& g_grid = {},
    const Tolerances& tol = {});

/// Convergence boundary of the nu = 1/2 family: the root of
/// rho^(1-2g) = t0(g) in (1/2, 1). Rounds to 0.88.
double s2c_convergence_bound(const Tolerances& tol = {});

/// Proposition 3: F_G(t) > f_{1/G}(t) for G > 1, t > 0, plus the t = 1
/// anchor f_g(1) = 1/(1-y0) with y0 the root of y = (1-y)^g.
VerificationReport verify_majorization(double order,
                                       const std::vector<double>& t_grid = {},
                                       const Tolerances& tol = {});

/// The reversed inequality for 0 < G < 1 (g = 1/G > 1).
VerificationReport verify_reverse_majorization(double order,
                                               const std::vector<double>& t_grid = {},
                                               const Tolerances& tol = {});

/// Proposition 4: entropy and central-charge majorization of Haldane-Wu
/// (g = 1/G) by Gentile(G). Two reports; skipped for G = 1 (equality).
std::vector<VerificationReport> verify_entropy_charge_majorization(
    double order, const std::vector<double>& mu_grid = {},
    const std::vector<double>& phi_grid = {}, const Tolerances& tol = {});

/// Proposition 5: L(x0) - g/(1+g) L(x0^{1+1/g}) > L(y0) strictly inside
/// (0,1), with near-equality at g = 1 (Abel) and g -> 0 checked as the
/// anchor residual (tolerance 1e-7).
VerificationReport verify_dilog_inequality(const std::vector<double>& g_grid = {},
                                           const std::vector<double>& phi_grid = {},
                                           const Tolerances& tol = {});

/// Proposition 1 bundle: solver-vs-series, log consistency, integer-power
/// and h-power convolutions, duality, the recursion route, the (1-y)^g <
/// 1-gy bound, the coefficient-ratio limit, and the (reported, untested)
/// non-integer-m series check.
std::vector<VerificationReport> verify_series_proposition(
    const std::vector<double>& g_grid = {}, const std::vector<int>& m_list = {},
    int n_max = 0, const Tolerances& tol = {});

/// Every report the library knows how to produce, on the default grids,
/// sorted by name. Independent reports run concurrently when `parallel`.
std::vector<VerificationReport> run_default_suite(const Tolerances& tol = {},
                                                  bool parallel = true);

}  // namespace exstat
