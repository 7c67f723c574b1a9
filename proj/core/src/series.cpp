#include "mzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mzeta/compensated.hpp"
#include "mzeta/detail/asymptotic.hpp"
#include "mzeta/errors.hpp"

namespace mzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

EvaluationConfig point_config(const EvaluationConfig& cfg) {
  EvaluationConfig p = cfg;
  p.rel_tol = std::min(cfg.rel_tol, 1e-13);
  return p;
}

double hz(double s, double alpha, const EvaluationConfig& cfg) {
  return hurwitz_zeta(ZetaArgument(s, alpha), cfg);
}

}  // namespace

Estimate zeta2_series_ex(double s1, double s2, const EvaluationConfig& cfg) {
  cfg.validate();
  if (!(s1 >= 1.0))
    throw domain_error("zeta2 requires s1 >= 1, got " + std::to_string(s1));
  if (!(s2 > 1.0))
    throw domain_error("zeta2 requires s2 > 1, got " + std::to_string(s2));
  if (!(s1 + s2 > 2.0))
    throw domain_error("zeta2 requires s1 + s2 > 2");

  const double tol = std::max(cfg.rel_tol, 1e-10);
  const EvaluationConfig pcfg = point_config(cfg);
  const auto exp2 =
      detail::expand_hurwitz(s2, std::min(8, cfg.em_bernoulli_depth));

  constexpr long long kCap = 1LL << 20;
  long long trunc = 64;
  long long next = 1;
  CompensatedSum head;
  double head_slack = 0.0;

  for (;;) {
    for (; next <= trunc; ++next) {
      const double w = std::pow(static_cast<double>(next), -s1);
      const Estimate z = hurwitz_zeta_ex(ZetaArgument(s2, next + 1.0), pcfg);
      head.add(w * z.value);
      head_slack += w * z.error;
    }

    // Tail sum_{n > trunc} n^-s1 zeta(s2, n+1) through the large-argument
    // expansion of the inner factor; each power term reduces to a lattice sum.
    CompensatedSum tail;
    double tail_slack = 0.0;
    for (const auto& t : exp2.terms) {
      double local = 0.0;
      const double v = detail::binomial_lattice_sum(s1, t.expnt, trunc + 1, &local);
      tail.add(t.coef * v);
      tail_slack += std::fabs(t.coef) * local;
    }
    tail_slack +=
        exp2.rem_coef * hz(s1 + exp2.rem_expnt, static_cast<double>(trunc + 1), pcfg);

    const double value = head.value() + tail.value();
    const double err = head_slack + tail_slack;
    const double scale = std::fabs(value);
    if (err <= 0.25 * tol * scale) return {value, err + 4.0 * kEps * scale};
    if (trunc >= kCap) {
      if (err <= tol * scale) return {value, err + 4.0 * kEps * scale};
      throw accuracy_error("zeta2 series: tail bound misses tolerance at cap");
    }
    trunc *= 2;
  }
}

double zeta2_series(double s1, double s2, const EvaluationConfig& cfg) {
  return zeta2_series_ex(s1, s2, cfg).value;
}

Estimate zeta3_series_ex(double s1, double s2, double s3,
                         const EvaluationConfig& cfg) {
  cfg.validate();
  if (!(s1 > 1.0) || !(s2 > 1.0) || !(s3 > 1.0))
    throw domain_error("zeta3 requires s1, s2, s3 > 1");

  const double tol = std::max(cfg.rel_tol, 1e-8);
  const EvaluationConfig pcfg = point_config(cfg);
  const int orders = std::min(8, cfg.em_bernoulli_depth);
  const auto exp3 = detail::expand_hurwitz(s3, orders);
  const auto exp1 = detail::expand_hurwitz(s1, orders);
  const Estimate z1 = hurwitz_zeta_ex(ZetaArgument(s1, 1.0), pcfg);

  constexpr long long kCap = 1LL << 18;
  long long trunc = 128;
  long long next = 2;
  CompensatedSum head;
  CompensatedSum prefix;  // sum_{n1 < n2} n1^-s1
  double head_slack = 0.0;

  for (;;) {
    for (; next <= trunc; ++next) {
      prefix.add(std::pow(static_cast<double>(next - 1), -s1));
      const double w = std::pow(static_cast<double>(next), -s2);
      const Estimate z = hurwitz_zeta_ex(ZetaArgument(s3, next + 1.0), pcfg);
      head.add(w * z.value * prefix.value());
      head_slack += w * z.error * prefix.value();
    }

    // Tail over n2 > trunc, using sum_{n1<n2} n1^-s1 = zeta(s1) - zeta(s1,n2).
    double slack = 0.0;
    CompensatedSum t2;  // sum_{n2>trunc} n2^-s2 zeta(s3, n2+1)
    for (const auto& t : exp3.terms) {
      double local = 0.0;
      const double v = detail::binomial_lattice_sum(s2, t.expnt, trunc + 1, &local);
      t2.add(t.coef * v);
      slack += std::fabs(t.coef) *
               (local * std::fabs(z1.value) + z1.error * std::fabs(v));
    }
    slack += exp3.rem_coef *
             hz(s2 + exp3.rem_expnt, static_cast<double>(trunc + 1), pcfg) *
             std::fabs(z1.value);

    CompensatedSum cross;  // sum_{n2>trunc} n2^-s2 zeta(s3, n2+1) zeta(s1, n2)
    double cross_slack = 0.0;
    for (const auto& a : exp3.terms) {
      for (const auto& c : exp1.terms) {
        double local = 0.0;
        const double v =
            detail::binomial_lattice_sum(s2 + c.expnt, a.expnt, trunc + 1, &local);
        cross.add(a.coef * c.coef * v);
        cross_slack += std::fabs(a.coef * c.coef) * local;
      }
    }
    const double shift = static_cast<double>(trunc + 1);
    const double c1 = 1.0 / (s1 - 1.0) + 1.0 / shift;
    cross_slack += exp3.rem_coef * c1 * hz(s2 + exp3.rem_expnt + s1 - 1.0, shift, pcfg);
    cross_slack += detail::expansion_magnitude(exp3, shift) * exp1.rem_coef *
                   hz(s2 + (s3 - 1.0) + exp1.rem_expnt, shift, pcfg);

    const double value = head.value() + z1.value * t2.value() - cross.value();
    const double err = head_slack + slack + cross_slack;
    const double scale = std::fabs(value);
    if (err <= 0.25 * tol * scale) return {value, err + 4.0 * kEps * scale};
    if (trunc >= kCap) {
      if (err <= tol * scale) return {value, err + 4.0 * kEps * scale};
      throw accuracy_error("zeta3 series: tail bound misses tolerance at cap");
    }
    trunc *= 2;
  }
}

double zeta3_series(double s1, double s2, double s3, const EvaluationConfig& cfg) {
  return zeta3_series_ex(s1, s2, s3, cfg).value;
}

namespace {

struct InnerSum {
  double value;
  double slack;
};

// sum_{n2 >= 1} n2^-s2 (n1 + n2)^-s3: direct head plus a binomial tail in
// k = n1 + n2 > K, sum_j (s2)_j/j! n1^j zeta(s2+s3+j, K+1).
InnerSum tornheim_inner(double s1_unused, double s2, double s3, long long n1,
                        const EvaluationConfig& pcfg) {
  (void)s1_unused;
  // Head long enough that the binomial ratio n1/big stays at most ~1/4,
  // which keeps the expansion short and its coefficients representable.
  const long long m = s2 == 0.0 ? 32 : std::max<long long>(32, 3 * n1);
  CompensatedSum acc;
  for (long long n2 = 1; n2 <= m; ++n2)
    acc.add(std::pow(static_cast<double>(n2), -s2) *
            std::pow(static_cast<double>(n1 + n2), -s3));

  const double big = static_cast<double>(n1 + m + 1);
  double slack = 0.0;
  double coef = 1.0;  // (s2)_j / j! * n1^j
  double term = 0.0;
  int j = 0;
  for (; j <= 300; ++j) {
    const Estimate z = hurwitz_zeta_ex(ZetaArgument(s2 + s3 + j, big), pcfg);
    term = coef * z.value;
    acc.add(term);
    slack += std::fabs(coef) * z.error;
    const double ratio = (s2 + j) / (j + 1.0) * static_cast<double>(n1) / big;
    coef *= (s2 + j) / (j + 1.0) * static_cast<double>(n1);
    if (coef == 0.0) break;
    const bool coef_at_risk = std::fabs(coef) > 1e250;
    if (ratio < 0.75 &&
        (coef_at_risk || std::fabs(term) <= 1e-3 * kEps * std::fabs(acc.value()))) {
      slack += std::fabs(term) * ratio / (1.0 - ratio);
      break;
    }
  }
  if (j > 300) slack += 3.0 * std::fabs(term);  // geometric leftover at the cap
  return {acc.value(), slack};
}

// Upper bound on sum_{n1 > N} n1^-s1 inner(n1), from inner(n1) <= (n1+1)^-s3
// + n1^-s3 int_1^n1 x^-s2 dx + n1^(1-s2-s3)/(s2+s3-1).
double tornheim_outer_bound(double s1, double s2, double s3, long long n,
                            const EvaluationConfig& pcfg) {
  const double shift = static_cast<double>(n + 1);
  double b = hz(s1 + s3, shift, pcfg);
  if (s2 > 1.0 + 1e-9) {
    b += hz(s1 + s3, shift, pcfg) / (s2 - 1.0);
  } else if (s2 < 1.0 - 1e-9) {
    b += hz(s1 + s2 + s3 - 1.0, shift, pcfg) / (1.0 - s2);
  } else {
    const double delta = 0.5 * std::min(1.0, s1 + s3 - 1.0);
    b += hz(s1 + s3 - delta, shift, pcfg) / delta;
  }
  b += hz(s1 + s2 + s3 - 1.0, shift, pcfg) / (s2 + s3 - 1.0);
  return b;
}

}  // namespace

Estimate tornheim_series_ex(double s1, double s2, double s3,
                            const EvaluationConfig& cfg) {
  cfg.validate();
  if (!(s1 >= 0.0) || !(s2 >= 0.0) || !(s3 >= 0.0))
    throw domain_error("tornheim requires nonnegative exponents");
  if (!(s1 + s3 > 1.0) || !(s2 + s3 > 1.0) || !(s1 + s2 + s3 > 2.0))
    throw domain_error(
        "tornheim requires s1+s3 > 1, s2+s3 > 1 and s1+s2+s3 > 2");

  const double tol = std::max(cfg.rel_tol, 1e-8);
  const EvaluationConfig pcfg = point_config(cfg);
  const long long cap = s2 == 0.0 ? (1LL << 21) : (1LL << 13);

  long long trunc = 64;
  long long next = 1;
  CompensatedSum acc;
  double slack = 0.0;

  for (;;) {
    for (; next <= trunc; ++next) {
      const InnerSum inner = tornheim_inner(s1, s2, s3, next, pcfg);
      const double w = std::pow(static_cast<double>(next), -s1);
      acc.add(w * inner.value);
      slack += w * inner.slack;
    }

    double tail = 0.0;
    double tail_err;
    if (s2 == 0.0) {
      // The inner sum collapses to zeta(s3, n1+1), so the outer tail reduces
      // to the same lattice sums as the double-zeta tail.
      const auto exp3 =
          detail::expand_hurwitz(s3, std::min(8, cfg.em_bernoulli_depth));
      CompensatedSum t;
      double tslack = 0.0;
      for (const auto& pt : exp3.terms) {
        double local = 0.0;
        const double v = detail::binomial_lattice_sum(s1, pt.expnt, trunc + 1, &local);
        t.add(pt.coef * v);
        tslack += std::fabs(pt.coef) * local;
      }
      tslack += exp3.rem_coef *
                hz(s1 + exp3.rem_expnt, static_cast<double>(trunc + 1), pcfg);
      tail = t.value();
      tail_err = tslack;
    } else {
      tail_err = tornheim_outer_bound(s1, s2, s3, trunc, pcfg);
    }

    const double value = acc.value() + tail;
    const double err = slack + tail_err;
    const double scale = std::fabs(value);
    if (err <= 0.25 * tol * scale) return {value, err + 4.0 * kEps * scale};
    if (trunc >= cap) {
      if (err <= tol * scale) return {value, err + 4.0 * kEps * scale};
      throw accuracy_error("tornheim series: tail bound misses tolerance at cap");
    }
    trunc *= 2;
  }
}

double tornheim_series(double s1, double s2, double s3,
                       const EvaluationConfig& cfg) {
  return tornheim_series_ex(s1, s2, s3, cfg).value;
}

VerificationReport reflection_check(double s1, double s2,
                                    const EvaluationConfig& cfg) {
  if (!(s1 > 1.0) || !(s2 > 1.0))
    throw domain_error("reflection_check requires s1, s2 > 1");
  const double forward = zeta2_series(s1, s2, cfg);
  const double reversed = zeta2_series(s2, s1, cfg);
  const double za = riemann_zeta(s1, cfg);
  const double zb = riemann_zeta(s2, cfg);
  const double zab = riemann_zeta(s1 + s2, cfg);

  CompensatedSum lhs;
  lhs.add(forward);
  lhs.add(reversed);
  CompensatedSum rhs;
  rhs.add(za * zb);
  rhs.add(-zab);

  return VerificationReport::make(
      "reflection", {s1, s2}, lhs.value(), rhs.value(), 1e-9,
      {{"term_zeta_product", za * zb},
       {"term_zeta_merged", -zab},
       {"zeta2_forward", forward},
       {"zeta2_reversed", reversed}});
}

}  // namespace mzeta
