#pragma once

#include <vector>

#include "mzeta/config.hpp"

namespace mzeta::detail {

// (s)_m = s (s+1) ... (s+m-1), with (s)_0 = 1.
double pochhammer(double s, int m);

struct PowerTerm {
  double coef;
  double expnt;  // contributes coef * x^(-expnt)
};

// Large-argument expansion of zeta(s, x): integral term, half term and
// `orders` Bernoulli corrections, with |zeta(s,x) - sum| <= rem_coef *
// x^(-rem_expnt) for all x > 0 (first-omitted-term bound).
struct ZetaExpansion {
  std::vector<PowerTerm> terms;
  double rem_coef = 0.0;
  double rem_expnt = 0.0;
  double lead_expnt = 0.0;  // = s - 1
};

ZetaExpansion expand_hurwitz(double s, int orders);

// M such that zeta(s, x) <= M * x^(-lead_expnt) for all x >= x0.
double expansion_magnitude(const ZetaExpansion& e, double x0);

// sum_{n >= start} n^-a (n+1)^-p for a + p > 1, start >= 1, by binomial
// reduction to Hurwitz zeta values at shift start + 1. Truncation slack and
// propagated evaluation error are added to *slack.
double binomial_lattice_sum(double a, double p, long long start, double* slack);

// sum_{n >= n0} (n+1)^-r * integral_n^{n+1} u^-q du for r + q > 1, n0 >= 1.
// Equals sum_{k>=1} (q)_{k-1}/k! zeta(r+q+k-1, n0+1).
double stepped_power_tail(double q, double r, long long n0, double* slack);

}  // namespace mzeta::detail
