#pragma once

#include <cstdint>

#include "zetatail/policy.hpp"

namespace zetatail::specfun {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Hurwitz zeta: sum_{i>=0} (i+t)^(-s), s > 1, t > 0.
double hurwitz_zeta(double s, double t, const SeriesPolicy& policy = {});

// Riemann zeta: hurwitz_zeta(s, 1).
double riemann_zeta(double s, const SeriesPolicy& policy = {});

// d/dt zeta(s, t) = -s * zeta(s+1, t).
double hurwitz_zeta_dt(double s, double t, const SeriesPolicy& policy = {});

// zeta(s) - 1/(s-1): the pole-free part, stable arbitrarily close to s = 1.
double riemann_zeta_minus_pole(double s, const SeriesPolicy& policy = {});

// Digamma, z > 0. Absolute error <= 1e-12.
double digamma(double z);

// Stirling numbers of the second kind, exact for kappa <= 30.
unsigned __int128 stirling2(int kappa, int nu);

}  // namespace zetatail::specfun
