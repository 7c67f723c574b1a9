#pragma once

#include "mzeta/errors.hpp"

namespace mzeta {

// Evaluation knobs shared by all engines. Defaults favor accuracy; every
// point evaluation is cheap enough that tightening costs little.
struct EvaluationConfig {
  double rel_tol = 1e-12;       // target relative error for point values
  int em_terms = 10;            // minimum number of directly summed terms
  int em_bernoulli_depth = 12;  // Bernoulli correction terms, at most 15
  int quad_order = 20;          // Gauss-Legendre nodes per unit segment
  int max_segments = 4096;      // cap on the [1, inf) segmentation

  void validate() const {
    if (!(rel_tol > 0.0) || !(rel_tol < 1.0))
      throw domain_error("EvaluationConfig: rel_tol must lie in (0, 1)");
    if (em_terms < 1)
      throw domain_error("EvaluationConfig: em_terms must be >= 1");
    if (em_bernoulli_depth < 1 || em_bernoulli_depth > 15)
      throw domain_error("EvaluationConfig: em_bernoulli_depth must lie in [1, 15]");
    if (quad_order < 4)
      throw domain_error("EvaluationConfig: quad_order must be >= 4");
    if (max_segments < 8)
      throw domain_error("EvaluationConfig: max_segments must be >= 8");
  }
};

}  // namespace mzeta
