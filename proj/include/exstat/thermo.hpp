#pragma once

#include <cstdint>

#include "exstat/genfun.hpp"

namespace exstat {

/// Saddle-point data at filling fraction mu: x is the positive root of
/// x f'(x) = mu f(x); s = ln f(x) - mu ln x is the entropy density (nats).
struct ThermoPoint {
  double mu = 0.0;
  double x = 0.0;
  double s = 0.0;
};

/// State count W(N, n). `w` carries the plain value (exact integer for
/// Gentile and for g in {0,1} whenever it fits a double; +inf past the
/// double range), `log_w` stays finite for any size. `exact` marks counts
/// obtained by integer combinatorics instead of the gamma extension.
struct CountResult {
  std::int64_t num_states = 0;
  std::int64_t num_particles = 0;
  double w = 0.0;
  double log_w = 0.0;
  bool exact = false;
};

/// Largest filling fraction with a saddle point: G for Gentile, 1/g for
/// Haldane-Wu (+inf for bosons).
double mu_max(const Statistics& stat);

/// Entropy density through the generic saddle equations, with f' taken from
/// the exact implicit/rational derivative of the generating function.
ThermoPoint entropy_generic(const Statistics& stat, double mu,
                            const Tolerances& tol = {});

/// Stirling closed form for Haldane-Wu:
/// (1+mu(1-g)) ln(1+mu(1-g)) - mu ln mu - (1-g mu) ln(1-g mu),
/// with the 0 ln 0 = 0 convention, on 0 <= mu <= 1/g.
double entropy_closed_hw(double g, double mu);

/// W(N, n): exact big-integer convolution for integer-order Gentile, the
/// gamma extension of the factorial formula for Haldane-Wu. The gamma
/// extension returns 0 whenever the denominator argument N - g n + g is
/// nonpositive (the pole convention at integers, extended to the unphysical
/// n > N/g + 1 sliver so counts stay nonnegative).
CountResult count_states(const Statistics& stat, std::int64_t num_states,
                         std::int64_t num_particles);

}  // namespace exstat
