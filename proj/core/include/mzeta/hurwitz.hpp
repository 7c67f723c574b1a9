#pragma once

#include "mzeta/config.hpp"

namespace mzeta {

/// Validated argument pair for zeta(s, alpha): requires s > 1 and alpha > 0.
struct ZetaArgument {
  double s;
  double alpha;
  ZetaArgument(double s_, double alpha_);
};

/// A value together with an absolute error bound.
struct Estimate {
  double value;
  double error;
};

/// Hurwitz zeta sum_{n>=0} (n + alpha)^-s by Euler-Maclaurin summation:
/// a direct head, the integral term x^(1-s)/(s-1), the half term x^-s/2 and
/// Bernoulli corrections at x = N + alpha, with a computed remainder bound.
double hurwitz_zeta(const ZetaArgument& arg, const EvaluationConfig& cfg = {});
double hurwitz_zeta(double s, double alpha, const EvaluationConfig& cfg = {});
Estimate hurwitz_zeta_ex(const ZetaArgument& arg, const EvaluationConfig& cfg = {});

/// zeta(s) = hurwitz_zeta(s, 1), bit for bit.
double riemann_zeta(double s, const EvaluationConfig& cfg = {});

/// Right-continuous step variant zeta(s, floor(u) + 1), constant on [n, n+1).
/// Requires s > 1 and u >= 1.
double step_hurwitz(double s, double u, const EvaluationConfig& cfg = {});

/// d/du zeta(s, u) at u = alpha, which equals -s * zeta(s + 1, alpha).
double hurwitz_du(const ZetaArgument& arg, const EvaluationConfig& cfg = {});

}  // namespace mzeta
