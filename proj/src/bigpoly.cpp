#include "exstat/bigpoly.hpp"

#include <algorithm>

#include "exstat/errors.hpp"

namespace exstat {

namespace {

long clamp_degree(const BigPoly& a, const BigPoly& b, long max_degree) {
  const long full = static_cast<long>(a.size()) + static_cast<long>(b.size()) - 2;
  return max_degree < 0 ? full : std::min(full, max_degree);
}

}  // namespace

BigPoly poly_mul_serial(const BigPoly& a, const BigPoly& b, long max_degree) {
  if (a.empty() || b.empty()) return {};
  const long top = clamp_degree(a, b, max_degree);
  BigPoly c(top + 1);
  for (long i = 0; i < static_cast<long>(a.size()); ++i) {
    if (i > top) break;
    const long j_hi = std::min<long>(b.size() - 1, top - i);
    for (long j = 0; j <= j_hi; ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

BigPoly poly_mul_parallel(const BigPoly& a, const BigPoly& b, long max_degree) {
  if (a.empty() || b.empty()) return {};
  const long top = clamp_degree(a, b, max_degree);
  BigPoly c(top + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k <= top; ++k) {
    const long i_lo = std::max<long>(0, k - static_cast<long>(b.size()) + 1);
    const long i_hi = std::min<long>(a.size() - 1, k);
    for (long i = i_lo; i <= i_hi; ++i) {
      mpz_addmul(c[k].get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
    }
  }
  return c;
}

BigPoly poly_pow(const BigPoly& base, unsigned exp, long max_degree, bool parallel) {
  auto mul = parallel ? poly_mul_parallel : poly_mul_serial;
  BigPoly result{mpz_class(1)};
  BigPoly square = base;
  while (exp > 0) {
    if (exp & 1u) result = mul(result, square, max_degree);
    exp >>= 1u;
    if (exp > 0) square = mul(square, square, max_degree);
  }
  return result;
}

mpz_class gentile_count(long order, long num_states, long num_particles,
                        bool parallel) {
  if (order < 1) throw DomainError("gentile_count: requires integer order >= 1");
  if (num_states < 1 || num_particles < 0) {
    throw DomainError("gentile_count: requires N >= 1, n >= 0");
  }
  if (num_particles > order * num_states) return 0;
  const BigPoly base(order + 1, mpz_class(1));
  const BigPoly power =
      poly_pow(base, static_cast<unsigned>(num_states), num_particles, parallel);
  if (num_particles >= static_cast<long>(power.size())) return 0;
  return power[num_particles];
}

}  // namespace exstat
