#include "exstat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace exstat {

void Tolerances::validate() const {
  if (!(root_abs > 0.0) || !(quad_abs > 0.0) || !(series_tail > 0.0)) {
    throw DomainError("Tolerances: all bounds must be strictly positive");
  }
  if (max_iter < 1) throw DomainError("Tolerances: max_iter must be >= 1");
}

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

Bracket Bracket::around(const std::function<double(double)>& func, double lo,
                        double hi) {
  if (!(lo < hi)) throw NoSignChange("Bracket: requires lo < hi");
  Bracket b;
  b.lo = lo;
  b.hi = hi;
  b.f_lo_sign = sign_of(func(lo));
  b.f_hi_sign = sign_of(func(hi));
  if (b.f_lo_sign * b.f_hi_sign > 0) {
    throw NoSignChange("Bracket: no sign change over [lo, hi]");
  }
  return b;
}

double solve_bracketed(const std::function<double(double)>& func, Bracket bracket,
                       const Tolerances& tol) {
  tol.validate();
  double lo = bracket.lo, hi = bracket.hi;
  if (!(lo < hi)) throw NoSignChange("solve_bracketed: requires lo < hi");

  double flo = func(lo), fhi = func(hi);
  if (std::abs(flo) <= tol.root_abs) return lo;
  if (std::abs(fhi) <= tol.root_abs) return hi;
  if (sign_of(flo) * sign_of(fhi) > 0 || sign_of(flo) == 0 || sign_of(fhi) == 0) {
    throw NoSignChange("solve_bracketed: no sign change over [lo, hi]");
  }

  // Secant pair: the two most recent iterates, seeded with the bracket ends.
  double xa = lo, fa = flo, xb = hi, fb = fhi;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    double x;
    if (fb != fa) {
      x = xb - fb * (xb - xa) / (fb - fa);
      if (!std::isfinite(x) || !(x > lo && x < hi)) x = 0.5 * (lo + hi);
    } else {
      x = 0.5 * (lo + hi);
    }
    const double fx = func(x);
    if (std::abs(fx) <= tol.root_abs) return x;
    if (sign_of(fx) == sign_of(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    xa = xb;
    fa = fb;
    xb = x;
    fb = fx;
  }
  throw NoConvergence("solve_bracketed: max_iter exceeded");
}

namespace {

// QUADPACK (G7,K15) pair on [-1,1]. Even-indexed Kronrod nodes are the
// Gauss-7 nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, err;
};

Segment gk15(const std::function<double(double)>& func, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = func(center);
    } else {
      fsum = func(center - half * kKronrodNodes[i]) +
             func(center + half * kKronrodNodes[i]);
    }
    kronrod += kKronrodWeights[i] * fsum;
    // Gauss-7 nodes sit at the odd Kronrod indices plus the center.
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    if (i == 7) gauss += kGaussWeights[3] * fsum;
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = kronrod * half;
  s.err = std::abs((kronrod - gauss) * half);
  return s;
}

}  // namespace

double integrate(const std::function<double(double)>& func, double a, double b,
                 const Tolerances& tol) {
  tol.validate();
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw DomainError("integrate: requires a <= b");
  }

  std::vector<Segment> segs;
  segs.push_back(gk15(func, a, b));
  const std::size_t max_segments = 4096;
  auto worse = [](const Segment& u, const Segment& v) { return u.err < v.err; };

  while (true) {
    double total_err = 0.0;
    for (const Segment& s : segs) total_err += s.err;
    if (total_err <= tol.quad_abs) break;
    if (segs.size() >= max_segments) {
      throw NoConvergence("integrate: subdivision limit reached");
    }
    std::pop_heap(segs.begin(), segs.end(), worse);
    const Segment hot = segs.back();
    segs.pop_back();
    const double mid = 0.5 * (hot.a + hot.b);
    if (!(hot.a < mid && mid < hot.b)) {
      throw NoConvergence("integrate: interval collapsed before reaching tolerance");
    }
    segs.push_back(gk15(func, hot.a, mid));
    std::push_heap(segs.begin(), segs.end(), worse);
    segs.push_back(gk15(func, mid, hot.b));
    std::push_heap(segs.begin(), segs.end(), worse);
  }

  double result = 0.0;
  for (const Segment& s : segs) result += s.value;
  return result;
}

double log_gamma(double z) {
  if (!(z > 0.0)) throw DomainError("log_gamma: requires z > 0");
  int sign = 0;
  return ::lgamma_r(z, &sign);
}

double rogers_dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("rogers_dilog: requires x in [0, 1]");
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (x == 0.0) return 0.0;
  if (x == 1.0) return pi2_6;
  // Reflection keeps the series argument at or below 1/2.
  if (x > 0.5) return pi2_6 - rogers_dilog(1.0 - x);

  double sum = 0.0;
  double power = 1.0;
  for (int n = 1; n <= 1000; ++n) {
    power *= x;
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-16) break;
  }
  return sum + 0.5 * std::log(x) * std::log1p(-x);
}

}  // namespace exstat
