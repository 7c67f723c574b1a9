#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mzeta/config.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/report.hpp"

namespace mzeta {

/// Stepped integral representation of the double zeta:
///   zeta2(s1, s2) = s1 int_1^inf zeta(s1+1, u) zeta(s2, [u]+1) du.
/// Requires s1 >= 1, s2 > 1 and s1 + s2 > 2.
double zeta2_integral(double s1, double s2, const EvaluationConfig& cfg = {});
Estimate zeta2_integral_ex(double s1, double s2, const EvaluationConfig& cfg = {});

/// Smooth approximation of the double zeta and its gap:
///   approx  = s1 int_1^inf zeta(s1+1, u) zeta(s2, u) du
///   a_value = approx - zeta2_integral(s1, s2)   (in [0, a_bound])
///   a_bound = s1 zeta(s1+1) / (s2 - 1)
/// When s2 - s1 is an even positive integer the integral also evaluates in
/// closed form; the two routes are cross-checked and the closed form is
/// returned as `approx`.
struct SmoothApprox {
  double approx;
  double a_value;
  double a_bound;
  bool closed_form_route;
};
SmoothApprox zeta2_smooth_approx(double s1, double s2,
                                 const EvaluationConfig& cfg = {});

/// Compares the series route against the stepped integral route, with the
/// smooth approximation and the gap bounds in the detail block.
VerificationReport verify_theorem1(double s1, double s2,
                                   const EvaluationConfig& cfg = {});

/// Triple zeta through the eight-term decomposition
///   zeta3 = zeta(s1)zeta(s2)zeta(s3) - zeta2(s1, s2+s3) - zeta2(s1+s2, s3)
///         - zeta(s1) zeta2(s3, s2) - zeta(s1+s2+s3)
///         - s2 I[step(s1) smooth(s2+1) smooth(s3)]
///         - s3 I[step(s1) smooth(s2) smooth(s3+1)]
///         + s3 I[step(s1) step(s2) smooth(s3+1)].
/// Requires s1, s2, s3 > 1. The zeta2 pieces come from the series engine so
/// the check stays independent of the two-variable integral route.
double zeta3_integral(double s1, double s2, double s3,
                      const EvaluationConfig& cfg = {});
Estimate zeta3_integral_ex(double s1, double s2, double s3,
                           const EvaluationConfig& cfg = {});

VerificationReport verify_theorem2(double s1, double s2, double s3,
                                   const EvaluationConfig& cfg = {});

/// Closed-form checks: int zeta(s,u) zeta(s+1,u) du = zeta(s)^2/(2s) and
/// int zeta(s,u)^2 zeta(s+1,u) du = zeta(s)^3/(3s), both at 1e-9.
VerificationReport verify_pair_closed_form(double s, const EvaluationConfig& cfg = {});
VerificationReport verify_triple_closed_form(double s, const EvaluationConfig& cfg = {});

/// Even-gap dual route: for s2 - s1 an even positive integer the smooth
/// integral s1 int zeta(s1+1,u) zeta(s2,u) du has a closed form; compares it
/// against quadrature at 1e-9.
VerificationReport verify_even_gap(double s1, double s2,
                                   const EvaluationConfig& cfg = {});

/// tornheim(s1, 0, s3) = zeta2(s1, s3), checked at 1e-8.
VerificationReport verify_tornheim_reduction(double s1, double s3,
                                             const EvaluationConfig& cfg = {});

// Default verification grids.
std::vector<std::pair<double, double>> theorem1_default_grid();
std::vector<std::array<double, 3>> theorem2_default_points();
std::vector<std::pair<double, double>> reflection_default_grid();
std::vector<std::pair<double, double>> tornheim_reduction_default_grid();
std::vector<double> pair_closed_form_default_grid();
std::vector<double> triple_closed_form_default_grid();
std::vector<std::pair<double, double>> even_gap_default_points();

// Identity tolerances: 1e-8 for theorem 1, relaxed to 1e-6 in the slow-decay
// band s1 + s2 < 3.25; 1e-6 for theorem 2, tightened to 1e-8 for fast decay.
double theorem1_tolerance(double s1, double s2);
double theorem2_tolerance(double s1, double s2, double s3);

}  // namespace mzeta
