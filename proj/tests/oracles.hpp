#pragma once

// Test-only reference routes, independent of the library implementations
// they are used to check.

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracles {

// Termwise dilogarithm series Li2(x) = sum_{n>=1} x^n / n^2 for |x| <= 1/2.
inline double li2_series(double x, int terms = 200) {
  double sum = 0.0, power = 1.0;
  for (int n = 1; n <= terms; ++n) {
    power *= x;
    sum += power / (static_cast<double>(n) * n);
  }
  return sum;
}

// Alternating zeta(2) partial sum with pairwise grouping:
// sum_{n>=1} (-1)^{n+1}/n^2 = pi^2/12. Tail after K pairs is ~1/(8 K^2).
inline double eta2_series(long pairs = 2000000) {
  double sum = 0.0;
  for (long k = pairs; k >= 1; --k) {
    const double odd = 2.0 * k - 1.0, even = 2.0 * k;
    sum += 1.0 / (odd * odd) - 1.0 / (even * even);
  }
  return sum;
}

// Cauchy product truncated at n_max.
inline std::vector<double> convolve(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    std::size_t n_max) {
  std::vector<double> c(n_max + 1, 0.0);
  for (std::size_t i = 0; i <= n_max && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j <= n_max && j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// m-fold Cauchy power of a coefficient list.
inline std::vector<double> convolve_power(const std::vector<double>& a, int m,
                                          std::size_t n_max) {
  std::vector<double> c(n_max + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k < m; ++k) c = convolve(c, a, n_max);
  return c;
}

// Formal power-series exponential: b = exp(a) with a[0] = 0, via
// b' = a' b, i.e. n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
inline std::vector<double> formal_exp(const std::vector<double>& a) {
  std::vector<double> b(a.size(), 0.0);
  if (a.empty()) return b;
  b[0] = 1.0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * b[n - k];
    b[n] = acc / static_cast<double>(n);
  }
  return b;
}

}  // namespace oracles
