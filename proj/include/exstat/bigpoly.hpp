#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace exstat {

/// Dense polynomial with exact integer coefficients, index = degree.
using BigPoly = std::vector<mpz_class>;

/// Schoolbook product, serial reference implementation.
/// Degrees above max_degree are dropped when max_degree >= 0.
BigPoly poly_mul_serial(const BigPoly& a, const BigPoly& b, long max_degree = -1);

/// Same product, OpenMP-parallel over output coefficients. Produces results
/// identical to poly_mul_serial.
BigPoly poly_mul_parallel(const BigPoly& a, const BigPoly& b, long max_degree = -1);

/// base^exp by repeated squaring; `parallel` selects the multiply kernel.
BigPoly poly_pow(const BigPoly& base, unsigned exp, long max_degree = -1,
                 bool parallel = true);

/// Number of ways to put n particles into N states under Gentile statistics
/// of integer order G: the t^n coefficient of (1 + t + ... + t^G)^N.
mpz_class gentile_count(long order, long num_states, long num_particles,
                        bool parallel = true);

}  // namespace exstat
