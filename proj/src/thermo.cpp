#include "exstat/thermo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "exstat/bigpoly.hpp"

namespace exstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double x_ln_x(double z) { return z > 0.0 ? z * std::log(z) : 0.0; }

// Occupancy x f'(x)/f(x) for Haldane-Wu, using the implicit derivative
// (g f + 1 - g) t f' = f^2 - f, which collapses to (f-1)/(g f + 1-g).
double hw_occupancy(double g, double x, const Tolerances& tol) {
  const double f = hw_generating_function(g, x, tol);
  if (g == 0.0) return f - 1.0;
  return (f - 1.0) / (g * f + 1.0 - g);
}

// Occupancy for Gentile of order G: with v = -ln x and M = G + 1,
//   x F'/F = 1/(e^v - 1) - M/(e^{Mv} - 1),
// whose expansion (M-1)/2 - (M^2-1)v/12 + (M^4-1)v^3/720 - ... takes over
// near x = 1 where the two poles cancel.
double gentile_occupancy(double order, double x) {
  const double m = order + 1.0;
  const double v = -std::log(x);
  if (std::abs(m * v) < 0.05) {
    const double m2 = m * m, m4 = m2 * m2, m6 = m4 * m2;
    const double v2 = v * v;
    return (m - 1.0) / 2.0 - (m2 - 1.0) * v / 12.0 + (m4 - 1.0) * v * v2 / 720.0 -
           (m6 - 1.0) * v2 * v2 * v / 30240.0;
  }
  return 1.0 / std::expm1(v) - m / std::expm1(m * v);
}

double solve_saddle(const Statistics& stat, double mu, const Tolerances& tol) {
  auto occupancy = [&](double x) {
    return stat.is_gentile() ? gentile_occupancy(stat.gentile_order(), x)
                             : hw_occupancy(stat.g(), x, tol);
  };
  auto resid = [&](double x) { return occupancy(x) - mu; };

  double lo = 1e-15;
  double hi;
  if (stat.is_haldane_wu() && stat.g() == 0.0) {
    hi = 1.0 - 1e-15;  // bosons: f diverges at t = 1, occupancy covers (0, inf)
  } else {
    hi = 1.0;
    int grow = 0;
    while (resid(hi) < 0.0) {
      hi *= 2.0;
      if (++grow > 1000) throw NoConvergence("entropy_generic: no saddle bracket");
    }
  }
  Bracket b;
  b.lo = lo;
  b.hi = hi;
  b.f_lo_sign = -1;
  b.f_hi_sign = 1;
  return solve_bracketed(resid, b, tol);
}

}  // namespace

double mu_max(const Statistics& stat) {
  if (stat.is_gentile()) return stat.gentile_order();
  const double g = stat.g();
  return g > 0.0 ? 1.0 / g : kInf;
}

ThermoPoint entropy_generic(const Statistics& stat, double mu, const Tolerances& tol) {
  if (!(mu > 0.0 && mu < mu_max(stat))) {
    throw DomainError("entropy_generic: requires 0 < mu < mu_max");
  }
  ThermoPoint pt;
  pt.mu = mu;
  pt.x = solve_saddle(stat, mu, tol);
  pt.s = log_eval(stat, pt.x, tol) - mu * std::log(pt.x);
  return pt;
}

double entropy_closed_hw(double g, double mu) {
  if (!(g >= 0.0 && g <= 1.0)) throw DomainError("entropy_closed_hw: g in [0,1]");
  const double cap = g > 0.0 ? 1.0 / g : kInf;
  if (!(mu >= 0.0 && mu <= cap)) {
    throw DomainError("entropy_closed_hw: requires 0 <= mu <= 1/g");
  }
  return x_ln_x(1.0 + mu * (1.0 - g)) - x_ln_x(mu) - x_ln_x(1.0 - g * mu);
}

CountResult count_states(const Statistics& stat, std::int64_t num_states,
                         std::int64_t num_particles) {
  if (num_states < 1 || num_particles < 0) {
    throw DomainError("count_states: requires N >= 1, n >= 0");
  }
  CountResult out;
  out.num_states = num_states;
  out.num_particles = num_particles;

  if (stat.is_gentile()) {
    if (!stat.gentile_integer_order()) {
      throw DomainError("count_states: Gentile counting needs an integer order");
    }
    const long order = static_cast<long>(stat.gentile_order());
    const mpz_class count = gentile_count(order, num_states, num_particles);
    out.exact = true;
    if (count == 0) {
      out.w = 0.0;
      out.log_w = -kInf;
      return out;
    }
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, count.get_mpz_t());
    out.log_w = std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
    out.w = mpz_sizeinbase(count.get_mpz_t(), 2) <= 1020 ? mpz_get_d(count.get_mpz_t())
                                                         : kInf;
    return out;
  }

  const double g = stat.g();
  const double n = static_cast<double>(num_particles);
  const double capacity_arg = num_states - g * n + g;  // denominator gamma argument
  out.exact = (g == 0.0 || g == 1.0);
  if (capacity_arg <= 0.0) {
    out.w = 0.0;
    out.log_w = -kInf;
    return out;
  }
  out.log_w = log_gamma(num_states + (1.0 - g) * n + g) - log_gamma(n + 1.0) -
              log_gamma(capacity_arg);
  out.w = std::exp(out.log_w);
  if (out.exact && out.w < 9.007199254740992e15) out.w = std::round(out.w);
  return out;
}

}  // namespace exstat
