#include "mzeta/detail/asymptotic.hpp"

#include <cmath>
#include <limits>

#include "mzeta/compensated.hpp"
#include "mzeta/detail/bernoulli.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/hurwitz.hpp"

namespace mzeta::detail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

EvaluationConfig inner_config() {
  EvaluationConfig cfg;
  cfg.rel_tol = 1e-13;
  return cfg;
}

}  // namespace

double pochhammer(double s, int m) {
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= s + i;
  return p;
}

ZetaExpansion expand_hurwitz(double s, int orders) {
  if (!(s > 1.0)) throw domain_error("expand_hurwitz requires s > 1");
  ZetaExpansion e;
  e.lead_expnt = s - 1.0;
  e.terms.push_back({1.0 / (s - 1.0), s - 1.0});
  e.terms.push_back({0.5, s});
  for (int j = 1; j <= orders; ++j) {
    const double c = kBernoulliOverFactorial[static_cast<std::size_t>(j)] *
                     pochhammer(s, 2 * j - 1);
    e.terms.push_back({c, s + 2.0 * j - 1.0});
  }
  e.rem_coef = std::fabs(kBernoulliOverFactorial[static_cast<std::size_t>(orders + 1)] *
                         pochhammer(s, 2 * orders + 1));
  e.rem_expnt = s + 2.0 * orders + 1.0;
  return e;
}

double expansion_magnitude(const ZetaExpansion& e, double x0) {
  double m = 0.0;
  for (const PowerTerm& t : e.terms)
    m += std::fabs(t.coef) * std::pow(x0, e.lead_expnt - t.expnt);
  m += e.rem_coef * std::pow(x0, e.lead_expnt - e.rem_expnt);
  return m;
}

double binomial_lattice_sum(double a, double p, long long start, double* slack) {
  // n^-a (n+1)^-p = sum_j (a)_j / j! (n+1)^-(a+p+j); ratio of consecutive
  // zeta terms is at most (a+j)/((j+1)(start+1)).
  const EvaluationConfig cfg = inner_config();
  const double shift = static_cast<double>(start + 1);
  CompensatedSum acc;
  double coef = 1.0;  // (a)_j / j!
  double local_slack = 0.0;
  double term = 0.0;
  int j = 0;
  for (; j <= 200; ++j) {
    const double w = a + p + j;
    const Estimate z = hurwitz_zeta_ex(ZetaArgument(w, shift), cfg);
    term = coef * z.value;
    acc.add(term);
    local_slack += std::fabs(coef) * z.error;
    const double ratio = (a + j) / ((j + 1.0) * shift);
    if (ratio < 0.5 && std::fabs(term) <= 1e-3 * kEps * std::fabs(acc.value())) {
      local_slack += std::fabs(term) * ratio / (1.0 - ratio);
      break;
    }
    coef *= (a + j) / (j + 1.0);
  }
  if (j > 200) {
    // conservative geometric leftover at the cap
    const double ratio = std::min(0.99, (a + 200.0) / (201.0 * shift));
    local_slack += std::fabs(term) * ratio / (1.0 - ratio);
  }
  if (slack) *slack += local_slack;
  return acc.value();
}

double stepped_power_tail(double q, double r, long long n0, double* slack) {
  const EvaluationConfig cfg = inner_config();
  const double shift = static_cast<double>(n0 + 1);
  CompensatedSum acc;
  double coef = 1.0;  // (q)_{k-1} / k! at k = 1
  double local_slack = 0.0;
  double term = 0.0;
  int k = 1;
  for (; k <= 200; ++k) {
    const double w = r + q + k - 1.0;
    const Estimate z = hurwitz_zeta_ex(ZetaArgument(w, shift), cfg);
    term = coef * z.value;
    acc.add(term);
    local_slack += std::fabs(coef) * z.error;
    const double ratio = (q + k - 1.0) / ((k + 1.0) * shift);
    if (ratio < 0.5 && std::fabs(term) <= 1e-3 * kEps * std::fabs(acc.value())) {
      local_slack += std::fabs(term) * ratio / (1.0 - ratio);
      break;
    }
    coef *= (q + k - 1.0) / (k + 1.0);
  }
  if (k > 200) {
    const double ratio = std::min(0.99, (q + 200.0) / (201.0 * shift));
    local_slack += std::fabs(term) * ratio / (1.0 - ratio);
  }
  if (slack) *slack += local_slack;
  return acc.value();
}

}  // namespace mzeta::detail
