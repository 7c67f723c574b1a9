#pragma once

#include <vector>

#include "mzeta/config.hpp"

namespace mzeta {

enum class FactorKind { Smooth, Step, Power };

/// One factor of an integrand over [1, inf):
///   Smooth(s) -> zeta(s, u), Step(s) -> zeta(s, [u]+1), Power(p) -> u^-p.
/// Smooth and Step require exponent > 1, Power requires exponent > 0.
struct IntegrandFactor {
  FactorKind kind;
  double exponent;

  static IntegrandFactor smooth(double s) { return {FactorKind::Smooth, s}; }
  static IntegrandFactor step(double s) { return {FactorKind::Step, s}; }
  static IntegrandFactor power(double p) { return {FactorKind::Power, p}; }

  // Contribution to the decay exponent at infinity.
  double decay() const {
    return kind == FactorKind::Power ? exponent : exponent - 1.0;
  }
};

struct QuadratureResult {
  double value = 0.0;
  double quad_error = 0.0;   // estimated error over the integrated segments
  double tail_bound = 0.0;   // bound on the error of the analytic tail
  int segments_used = 0;
  double rel_tol_used = 0.0; // effective tolerance (relaxed near slow decay)

  double total_error() const { return quad_error + tail_bound; }
};

/// Integrates the product of the factors over [1, inf). Unit segments
/// [n, n+1) are integrated by Gauss-Legendre with the error estimated by
/// order escalation; Step factors are constants zeta(s, n+1) per segment.
/// The remaining [N, inf) mass is summed analytically from large-argument
/// expansions, with the expansion remainders reported in tail_bound.
/// The total decay exponent must exceed 1.
QuadratureResult integrate_product(const std::vector<IntegrandFactor>& factors,
                                   const EvaluationConfig& cfg = {});

/// int_1^inf zeta(a,u) zeta(b,u) du for b - a an odd positive integer and
/// a > 1, by parts down to the base case zeta(s)^2 / (2s):
///   I(a, b) = zeta(a) zeta(b-1)/(b-1) - a/(b-1) I(a+1, b-1).
double smooth_pair_closed_form(double a, double b, const EvaluationConfig& cfg = {});

}  // namespace mzeta
