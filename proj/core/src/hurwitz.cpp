#include "mzeta/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mzeta/compensated.hpp"
#include "mzeta/detail/bernoulli.hpp"
#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDirectTerms = 1 << 22;

struct EmPass {
  double value;
  double bound;  // remainder bound: magnitude of the first omitted term
};

// One Euler-Maclaurin pass with n_direct leading terms. The correction terms
// are B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}; u -> (u + alpha)^-s is completely
// monotone, so the remainder is bounded by the first omitted term.
EmPass em_pass(double s, double alpha, int n_direct, int depth) {
  CompensatedSum acc;
  for (int n = 0; n < n_direct; ++n) acc.add(std::pow(n + alpha, -s));

  const double x = n_direct + alpha;
  acc.add(std::pow(x, 1.0 - s) / (s - 1.0));
  const double px = std::pow(x, -s);
  acc.add(0.5 * px);

  double poch = s;      // (s)_{2j-1}
  double pw = px / x;   // x^{-s-2j+1}
  double prev_mag = std::numeric_limits<double>::infinity();
  double bound = 0.0;
  for (int j = 1;; ++j) {
    const double term =
        detail::kBernoulliOverFactorial[static_cast<std::size_t>(j)] * poch * pw;
    const double mag = std::fabs(term);
    if (j > depth || mag >= prev_mag) {
      bound = mag;
      break;
    }
    acc.add(term);
    prev_mag = mag;
    poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    pw /= x * x;
  }
  return {acc.value(), bound};
}

}  // namespace

ZetaArgument::ZetaArgument(double s_, double alpha_) : s(s_), alpha(alpha_) {
  if (!(s > 1.0))
    throw domain_error("hurwitz zeta requires s > 1, got s = " + std::to_string(s_));
  if (!(alpha > 0.0))
    throw domain_error("hurwitz zeta requires alpha > 0, got alpha = " +
                       std::to_string(alpha_));
}

Estimate hurwitz_zeta_ex(const ZetaArgument& arg, const EvaluationConfig& cfg) {
  cfg.validate();
  const double s = arg.s;
  const double alpha = arg.alpha;

  // Internal target below the shared tolerance so that algebraic identities
  // between point values hold to a few ulp.
  const double internal_tol = std::min(cfg.rel_tol, 4.0 * kEps);

  // Head length: push x = N + alpha to x0 so the Bernoulli series bottoms out
  // near machine level. For large s it is enough that (x/alpha)^-s reaches
  // eps, which keeps the head short when s dominates.
  const double x0 = std::max(20.0, std::ceil(s) + 12.0);
  const double plain = std::max(0.0, std::ceil(x0 - alpha));
  double cut = alpha * (std::pow(kEps, -1.0 / s) - 1.0) + 4.0;
  cut = std::min(cut, static_cast<double>(kMaxDirectTerms));
  int n_direct = std::max(cfg.em_terms,
                          static_cast<int>(std::ceil(std::min(plain, cut))));
  n_direct = std::min(n_direct, kMaxDirectTerms);

  for (;;) {
    const EmPass pass = em_pass(s, alpha, n_direct, cfg.em_bernoulli_depth);
    const double scale = std::fabs(pass.value);
    const double noise = 4.0 * kEps * scale;
    if (pass.bound <= internal_tol * scale)
      return {pass.value, pass.bound + noise};
    if (n_direct >= kMaxDirectTerms) {
      if (pass.bound <= cfg.rel_tol * scale) return {pass.value, pass.bound + noise};
      throw accuracy_error("hurwitz zeta: remainder bound " +
                           std::to_string(pass.bound) +
                           " misses rel_tol at the direct-term cap");
    }
    n_direct = std::min(2 * n_direct + 16, kMaxDirectTerms);
  }
}

double hurwitz_zeta(const ZetaArgument& arg, const EvaluationConfig& cfg) {
  return hurwitz_zeta_ex(arg, cfg).value;
}

double hurwitz_zeta(double s, double alpha, const EvaluationConfig& cfg) {
  return hurwitz_zeta_ex(ZetaArgument(s, alpha), cfg).value;
}

double riemann_zeta(double s, const EvaluationConfig& cfg) {
  return hurwitz_zeta(ZetaArgument(s, 1.0), cfg);
}

double step_hurwitz(double s, double u, const EvaluationConfig& cfg) {
  if (!(u >= 1.0))
    throw domain_error("step_hurwitz requires u >= 1, got u = " + std::to_string(u));
  return hurwitz_zeta(ZetaArgument(s, std::floor(u) + 1.0), cfg);
}

double hurwitz_du(const ZetaArgument& arg, const EvaluationConfig& cfg) {
  return -arg.s * hurwitz_zeta(ZetaArgument(arg.s + 1.0, arg.alpha), cfg);
}

}  // namespace mzeta
