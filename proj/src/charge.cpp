#include "exstat/charge.hpp"

#include <cmath>
#include <numbers>

namespace exstat {

namespace {

constexpr double kSixOverPiSq = 6.0 / (std::numbers::pi * std::numbers::pi);

double log_f(const ChargeProblem& prob, double t, const Tolerances& tol) {
  return log_eval(prob.stat, t, tol);
}

// integral_0^{x0} ln f(t)/t dt - (1/2) ln x0 ln f(x0). The integrand tends
// to f'(0) = 1 at t = 0 for every statistics here.
double bracketed_expression(const ChargeProblem& prob, double x0,
                            const Tolerances& tol) {
  auto integrand = [&](double t) {
    return t == 0.0 ? 1.0 : log_f(prob, t, tol) / t;
  };
  const double integral = integrate(integrand, 0.0, x0, tol);
  const double boundary =
      x0 == 1.0 ? 0.0 : 0.5 * std::log(x0) * log_f(prob, x0, tol);
  return integral - boundary;
}

bool is_boson_corner(const ChargeProblem& prob) {
  return prob.stat.is_haldane_wu() && prob.stat.g() == 0.0 && prob.phi == 0.0;
}

}  // namespace

double solve_x0(const ChargeProblem& prob, const Tolerances& tol) {
  if (prob.phi == 0.0) return 1.0;
  auto h = [&](double x) { return std::log(x) + prob.phi * log_f(prob, x, tol); };
  // f(0)=1 pins the root inside (0, 1]; bosons need the open right end.
  const bool boson = prob.stat.is_haldane_wu() && prob.stat.g() == 0.0;
  Bracket b;
  b.lo = 1e-12;
  b.hi = boson ? 1.0 - 1e-12 : 1.0;
  b.f_lo_sign = -1;
  b.f_hi_sign = 1;
  return solve_bracketed(h, b, tol);
}

double solve_y0(double nu, const Tolerances& tol) {
  if (!(nu >= 0.0)) throw DomainError("solve_y0: requires nu >= 0");
  if (nu == 0.0) return 1.0;
  auto h = [nu](double y) { return std::log(y) - nu * std::log1p(-y); };
  Bracket b;
  b.lo = 1e-15;
  b.hi = 1.0 - 1e-15;
  b.f_lo_sign = -1;
  b.f_hi_sign = 1;
  return solve_bracketed(h, b, tol);
}

double charge_integral(const ChargeProblem& prob, const Tolerances& tol) {
  if (is_boson_corner(prob)) {
    // x0 = 1 while f_0 diverges there: evaluate at x0 = 1 - eps and remove
    // the leading (eps/2)(ln eps - 2) defect by two-point extrapolation.
    const double eps1 = 1e-6, eps2 = 1e-7;
    const double i1 = bracketed_expression(prob, 1.0 - eps1, tol);
    const double i2 = bracketed_expression(prob, 1.0 - eps2, tol);
    const double m1 = eps1 * (std::log(eps1) - 2.0);
    const double m2 = eps2 * (std::log(eps2) - 2.0);
    const double kappa = m2 / m1;
    return kSixOverPiSq * (i2 - kappa * i1) / (1.0 - kappa);
  }
  const double x0 = solve_x0(prob, tol);
  return kSixOverPiSq * bracketed_expression(prob, x0, tol);
}

double charge_closed(const ChargeProblem& prob, const Tolerances& tol) {
  if (prob.stat.is_haldane_wu()) {
    return kSixOverPiSq * rogers_dilog(solve_y0(prob.nu(), tol));
  }
  const double order = prob.stat.gentile_order();
  const double x0 = solve_x0(prob, tol);
  return kSixOverPiSq * (rogers_dilog(x0) -
                         rogers_dilog(std::pow(x0, order + 1.0)) / (order + 1.0));
}

ChargeResult charge_both(const ChargeProblem& prob, const Tolerances& tol) {
  ChargeResult res;
  res.x0 = solve_x0(prob, tol);
  res.c_integral = charge_integral(prob, tol);
  res.c_closed = charge_closed(prob, tol);
  res.residual = std::abs(res.c_integral - res.c_closed);

  if (prob.stat.is_haldane_wu()) {
    res.y0 = solve_y0(prob.nu(), tol);
    if (prob.stat.g() == 0.0 && prob.phi == 0.0) {
      res.y_link_residual = 0.0;  // x0 = y0 = 1, f diverges: the link is the limit itself
    } else {
      const double y_mid = -std::expm1(-log_f(prob, res.x0, tol));  // 1 - 1/f(x0)
      res.y_link_residual = std::abs(y_mid - res.y0);
    }
  } else {
    res.y0 = -std::expm1(-log_f(prob, res.x0, tol));
    res.y_link_residual = 0.0;
  }
  return res;
}

}  // namespace exstat
