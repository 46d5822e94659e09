#include "exstat/genfun.hpp"

#include <cmath>
#include <limits>

namespace exstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

double hw_radius(double g) {
  if (g == 0.0 || g == 1.0) return 1.0;
  return std::exp(-g * std::log(g) - (1.0 - g) * std::log1p(-g));
}

// Gentile F(t) = (1 - t^(G+1)) / (1 - t), written through expm1 of
// v = -ln t so that t near 1 stays exact. Valid for all t >= 0.
double gentile_eval_m1(double order, double t) {
  const double m = order + 1.0;
  if (t < 0.0) {
    if (!is_integer(order)) {
      throw DomainError("gentile: negative t requires an integer order");
    }
    return (t - std::pow(t, m)) / (1.0 - t);
  }
  if (t == 0.0) return 0.0;
  const double u = 1.0 - t;
  if (u == 0.0) return order;
  const double v = -std::log1p(-u);  // = -ln t
  if (m * std::abs(v) > 700.0) {
    // F is astronomically large (or within an ulp of 1); cancellation is moot.
    return std::expm1(-m * v) / std::expm1(-v) - 1.0;
  }
  return (std::expm1(-m * v) - std::expm1(-v)) / std::expm1(-v);
}

double gentile_eval(double order, double t) { return gentile_eval_m1(order, t) + 1.0; }

// Sum_{n>=1} f_n t^n for the Haldane-Wu series, with the term count picked
// from the distance to the convergence radius.
double hw_series_f_minus_one(double g, double t, const Tolerances& tol) {
  const double r0 = hw_radius(g);
  const double ratio = std::abs(t) / r0;
  if (!(ratio < 1.0)) {
    throw OutsideRadius("haldane-wu series: |t| >= convergence radius");
  }
  int n_max = 16;
  if (ratio > 0.01) {
    n_max = static_cast<int>(std::ceil(std::log(tol.series_tail) / std::log(ratio))) + 4;
  }
  n_max = std::min(std::max(n_max, 16), 4000);
  const SeriesCoefficients series =
      coefficients(Statistics::haldane_wu(g), SeriesKind::f, n_max);
  double acc = 0.0;
  for (int n = n_max; n >= 1; --n) acc = acc * t + series.coeffs[n];
  acc *= t;
  const double last = std::abs(series.coeffs[n_max]) *
                      std::pow(std::abs(t), static_cast<double>(n_max));
  if (last > tol.series_tail) {
    throw TailTooLarge("haldane-wu series: truncation tail above series_tail");
  }
  return acc;
}

}  // namespace

Statistics Statistics::haldane_wu(double g) {
  if (!(g >= 0.0 && g <= 1.0)) {
    throw DomainError("Statistics: Haldane-Wu requires 0 <= g <= 1");
  }
  return Statistics(Family::haldane_wu, g);
}

Statistics Statistics::gentile(double order) {
  if (!(order > 0.0)) throw DomainError("Statistics: Gentile requires G > 0");
  return Statistics(Family::gentile, order);
}

double Statistics::g() const {
  if (family_ != Family::haldane_wu) {
    throw DomainError("Statistics: g() is Haldane-Wu only");
  }
  return param_;
}

double Statistics::gentile_order() const {
  if (family_ != Family::gentile) {
    throw DomainError("Statistics: gentile_order() is Gentile only");
  }
  return param_;
}

bool Statistics::gentile_integer_order() const {
  return family_ == Family::gentile && is_integer(param_);
}

double hw_generating_function(double g, double t, const Tolerances& tol) {
  if (!(g >= 0.0)) throw DomainError("hw_generating_function: requires g >= 0");
  if (!(t >= 0.0)) throw DomainError("hw_generating_function: requires t >= 0");
  if (t == 0.0) return 1.0;
  if (g == 0.0) {
    if (t >= 1.0) throw DomainError("bosons: generating function diverges for t >= 1");
    return 1.0 / (1.0 - t);
  }
  if (g == 1.0) return 1.0 + t;

  auto implicit = [g, t](double f) { return f - 1.0 - t * std::pow(f, 1.0 - g); };
  double hi = 2.0;
  while (implicit(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e300) throw NoConvergence("hw_generating_function: no upper bracket");
  }
  Bracket b;
  b.lo = 1.0;
  b.hi = hi;
  b.f_lo_sign = -1;
  b.f_hi_sign = 1;
  return solve_bracketed(implicit, b, tol);
}

double eval(const Statistics& stat, double t, const Tolerances& tol) {
  if (stat.is_gentile()) return gentile_eval(stat.gentile_order(), t);
  const double g = stat.g();
  if (t < 0.0) return 1.0 + hw_series_f_minus_one(g, t, tol);
  return hw_generating_function(g, t, tol);
}

double log_eval(const Statistics& stat, double t, const Tolerances& tol) {
  if (stat.is_gentile()) {
    return std::log1p(gentile_eval_m1(stat.gentile_order(), t));
  }
  const double g = stat.g();
  if (t < 0.0) return std::log1p(hw_series_f_minus_one(g, t, tol));
  if (t == 0.0) return 0.0;
  if (g == 0.0) {
    if (t >= 1.0) throw DomainError("bosons: generating function diverges for t >= 1");
    return -std::log1p(-t);
  }
  if (g == 1.0) return std::log1p(t);
  // f - 1 = t f^(1-g) makes log1p exact even for tiny t.
  const double f = hw_generating_function(g, t, tol);
  return std::log1p(t * std::pow(f, 1.0 - g));
}

double pow_eval(const Statistics& stat, double t, double m, const Tolerances& tol) {
  return std::exp(m * log_eval(stat, t, tol));
}

double radius(const Statistics& stat) {
  if (stat.is_gentile()) return kInf;
  return hw_radius(stat.g());
}

SeriesCoefficients coefficients(const Statistics& stat, SeriesKind kind, int n_max,
                                int m) {
  if (n_max < 0) throw DomainError("coefficients: requires n_max >= 0");
  SeriesCoefficients out;
  out.kind = kind;
  out.m = m;
  out.coeffs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

  if (stat.is_gentile()) {
    if (kind != SeriesKind::f || !stat.gentile_integer_order()) {
      throw DomainError("coefficients: Gentile series need kind f and integer order");
    }
    out.g = 0.0;
    out.radius = kInf;
    const double order = stat.gentile_order();
    for (int n = 0; n <= n_max; ++n) {
      if (n <= order) out.coeffs[n] = 1.0;
    }
    return out;
  }

  const double g = stat.g();
  out.g = g;
  out.radius = hw_radius(g);

  switch (kind) {
    case SeriesKind::f: {
      out.coeffs[0] = 1.0;
      if (n_max >= 1) out.coeffs[1] = 1.0;
      for (int n = 2; n <= n_max; ++n) {
        double prod = 1.0;
        for (int k = 2; k <= n; ++k) prod *= 1.0 - g * n / k;
        out.coeffs[n] = prod;
      }
      break;
    }
    case SeriesKind::log_f: {
      if (n_max >= 1) out.coeffs[1] = 1.0;
      for (int n = 2; n <= n_max; ++n) {
        if (g == 1.0) {
          out.coeffs[n] = (n % 2 == 0 ? -1.0 : 1.0) / n;
        } else if (g == 0.0) {
          out.coeffs[n] = 1.0 / n;
        } else {
          double f_n = 1.0;
          for (int k = 2; k <= n; ++k) f_n *= 1.0 - g * n / k;
          out.coeffs[n] = (1.0 - g * n) / ((1.0 - g) * n) * f_n;
        }
      }
      break;
    }
    case SeriesKind::f_pow_m: {
      if (m == 0) throw DomainError("coefficients: f_pow_m requires integer m != 0");
      out.coeffs[0] = 1.0;
      if (n_max >= 1) out.coeffs[1] = m;
      for (int n = 2; n <= n_max; ++n) {
        double prod = m;
        for (int k = 2; k <= n; ++k) prod *= 1.0 + (m - 1.0 - g * n) / k;
        out.coeffs[n] = prod;
      }
      break;
    }
    case SeriesKind::h_pow_m: {
      if (m < 1) throw DomainError("coefficients: h_pow_m requires integer m >= 1");
      for (int n = m; n <= n_max; ++n) {
        // m f_n (n-1)!/(n-m)! / prod_{j=2..m}(j - g n), with the potentially
        // vanishing j - g n factors cancelled against f_n analytically.
        double prod = static_cast<double>(m) / n;
        for (int k = m + 1; k <= n; ++k) prod *= (k - g * n) / (k - m);
        out.coeffs[n] = prod;
      }
      break;
    }
  }
  return out;
}

double eval_series(const SeriesCoefficients& series, double t, const Tolerances& tol) {
  tol.validate();
  if (!(std::abs(t) < series.radius)) {
    throw OutsideRadius("eval_series: |t| >= convergence radius");
  }
  if (series.coeffs.empty()) return 0.0;
  const std::size_t top = series.coeffs.size() - 1;

  const double c_top = series.coeffs[top];
  double last = 0.0;
  if (c_top != 0.0 && t != 0.0 && top > 0) {
    last = std::exp(std::log(std::abs(c_top)) +
                    static_cast<double>(top) * std::log(std::abs(t)));
  }
  if (last > tol.series_tail) {
    throw TailTooLarge("eval_series: last retained term above series_tail");
  }

  double acc = 0.0;
  for (std::size_t i = series.coeffs.size(); i-- > 0;) {
    acc = acc * t + series.coeffs[i];
  }
  return acc;
}

double duality_residual(double g, double t, const Tolerances& tol) {
  if (!(g > 0.0 && g < 1.0)) {
    throw DomainError("duality_residual: requires 0 < g < 1");
  }
  const double fg = 1.0 + hw_series_f_minus_one(g, t, tol);
  const double fd = 1.0 + hw_series_f_minus_one(1.0 - g, -t, tol);
  return fg * fd - 1.0;
}

}  // namespace exstat
