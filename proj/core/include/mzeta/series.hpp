#pragma once

#include "mzeta/config.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/report.hpp"

namespace mzeta {

/// Double zeta sum_{n1 >= 1} n1^-s1 sum_{n2 > n1} n2^-s2 by direct summation
/// of the outer series with an analytic tail. Requires s1 >= 1, s2 > 1 and
/// s1 + s2 > 2; guaranteed relative error max(cfg.rel_tol, 1e-10).
double zeta2_series(double s1, double s2, const EvaluationConfig& cfg = {});
Estimate zeta2_series_ex(double s1, double s2, const EvaluationConfig& cfg = {});

/// Triple zeta sum over n1 < n2 < n3 of n1^-s1 n2^-s2 n3^-s3. Requires all
/// exponents > 1; guaranteed relative error max(cfg.rel_tol, 1e-8).
double zeta3_series(double s1, double s2, double s3, const EvaluationConfig& cfg = {});
Estimate zeta3_series_ex(double s1, double s2, double s3,
                         const EvaluationConfig& cfg = {});

/// Tornheim double series sum_{n1,n2 >= 1} n1^-s1 n2^-s2 (n1+n2)^-s3.
/// Requires s1, s2, s3 >= 0 with s1+s3 > 1, s2+s3 > 1 and s1+s2+s3 > 2;
/// guaranteed relative error max(cfg.rel_tol, 1e-8).
double tornheim_series(double s1, double s2, double s3,
                       const EvaluationConfig& cfg = {});
Estimate tornheim_series_ex(double s1, double s2, double s3,
                            const EvaluationConfig& cfg = {});

/// Checks zeta2(s1,s2) + zeta2(s2,s1) = zeta(s1) zeta(s2) - zeta(s1+s2)
/// at tolerance 1e-9. Requires s1, s2 > 1.
VerificationReport reflection_check(double s1, double s2,
                                    const EvaluationConfig& cfg = {});

}  // namespace mzeta
