#include "mzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "mzeta/compensated.hpp"
#include "mzeta/detail/asymptotic.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/hurwitz.hpp"

namespace mzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;

EvaluationConfig point_config(const EvaluationConfig& cfg) {
  EvaluationConfig p = cfg;
  p.rel_tol = std::min(cfg.rel_tol, 1e-13);
  return p;
}

struct GaussRule {
  std::vector<double> nodes;    // on (0, 1)
  std::vector<double> weights;  // for unit length
};

// Newton iteration on the Legendre recurrence; nodes mapped to (0, 1).
GaussRule gauss_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      deriv = order * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / deriv;
      z -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    const std::size_t lo = static_cast<std::size_t>(i);
    const std::size_t hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - z);
    rule.nodes[hi] = 0.5 * (1.0 + z);
    rule.weights[lo] = 1.0 / ((1.0 - z * z) * deriv * deriv);
    rule.weights[hi] = rule.weights[lo];
  }
  return rule;
}

void validate_factors(const std::vector<IntegrandFactor>& factors) {
  if (factors.empty()) throw domain_error("integrate_product: empty factor list");
  double decay = 0.0;
  for (const IntegrandFactor& f : factors) {
    switch (f.kind) {
      case FactorKind::Smooth:
      case FactorKind::Step:
        if (!(f.exponent > 1.0))
          throw domain_error("integrate_product: zeta factors require exponent > 1");
        break;
      case FactorKind::Power:
        if (!(f.exponent > 0.0))
          throw domain_error("integrate_product: power factors require exponent > 0");
        break;
    }
    decay += f.decay();
  }
  if (!(decay > 1.0))
    throw domain_error("integrate_product: total decay exponent must exceed 1");
}

// Product of the non-step factors at u.
double smooth_part(const std::vector<IntegrandFactor>& factors, double u,
                   const EvaluationConfig& pcfg) {
  double v = 1.0;
  for (const IntegrandFactor& f : factors) {
    if (f.kind == FactorKind::Smooth)
      v *= hurwitz_zeta(ZetaArgument(f.exponent, u), pcfg);
    else if (f.kind == FactorKind::Power)
      v *= std::pow(u, -f.exponent);
  }
  return v;
}

struct SegmentValue {
  double value;
  double error;
};

SegmentValue integrate_segment(const std::vector<IntegrandFactor>& factors,
                               long long n, const GaussRule& low,
                               const GaussRule& high,
                               const EvaluationConfig& pcfg) {
  double stepped = 1.0;
  for (const IntegrandFactor& f : factors)
    if (f.kind == FactorKind::Step)
      stepped *= hurwitz_zeta(ZetaArgument(f.exponent, static_cast<double>(n + 1)), pcfg);

  const double base = static_cast<double>(n);
  CompensatedSum lo;
  for (std::size_t i = 0; i < low.nodes.size(); ++i)
    lo.add(low.weights[i] * smooth_part(factors, base + low.nodes[i], pcfg));
  CompensatedSum hi;
  for (std::size_t i = 0; i < high.nodes.size(); ++i)
    hi.add(high.weights[i] * smooth_part(factors, base + high.nodes[i], pcfg));

  const double value = stepped * hi.value();
  const double err =
      stepped * std::fabs(hi.value() - lo.value()) + 4.0 * kEps * std::fabs(value);
  return {value, err};
}

struct ProductTerm {
  double coef;
  double u_exp;  // exponent on u
  double m_exp;  // exponent on [u] + 1
};

struct TailEstimate {
  double value;
  double bound;
};

// Tail over [N, inf): every factor is replaced by its large-argument power
// expansion (Step factors in the lattice variable m = [u]+1), the product is
// expanded term by term, pure power terms integrate in closed form and
// lattice terms reduce to Hurwitz zeta sums. All expansion remainders and
// truncation slack go into `bound`.
TailEstimate tail_estimate(const std::vector<IntegrandFactor>& factors,
                           long long tail_start, const EvaluationConfig& cfg) {
  const double start = static_cast<double>(tail_start);
  const int orders = std::min(factors.size() >= 3 ? 6 : 8, cfg.em_bernoulli_depth);

  struct FactorExpansion {
    std::vector<detail::PowerTerm> terms;
    bool lattice = false;
    double rem_coef = 0.0;
    double rem_expnt = 0.0;
    double lead = 0.0;
    double magnitude = 0.0;  // |factor(u)| <= magnitude * u^-lead for u >= start
  };

  std::vector<FactorExpansion> parts;
  parts.reserve(factors.size());
  for (const IntegrandFactor& f : factors) {
    FactorExpansion fe;
    if (f.kind == FactorKind::Power) {
      fe.terms.push_back({1.0, f.exponent});
      fe.lead = f.exponent;
      fe.magnitude = 1.0;
    } else {
      const detail::ZetaExpansion e = detail::expand_hurwitz(f.exponent, orders);
      fe.terms = e.terms;
      fe.rem_coef = e.rem_coef;
      fe.rem_expnt = e.rem_expnt;
      fe.lead = e.lead_expnt;
      fe.magnitude = detail::expansion_magnitude(e, start);
      fe.lattice = f.kind == FactorKind::Step;
    }
    parts.push_back(std::move(fe));
  }

  // Cross the per-factor terms.
  std::vector<ProductTerm> product = {{1.0, 0.0, 0.0}};
  for (const FactorExpansion& fe : parts) {
    std::vector<ProductTerm> next;
    next.reserve(product.size() * fe.terms.size());
    for (const ProductTerm& t : product) {
      for (const detail::PowerTerm& p : fe.terms) {
        ProductTerm nt = t;
        nt.coef *= p.coef;
        (fe.lattice ? nt.m_exp : nt.u_exp) += p.expnt;
        next.push_back(nt);
      }
    }
    product = std::move(next);
  }

  // Per-term contribution bound |c| N^(1-q-r)/(q+r-1); negligible terms are
  // folded into the slack instead of being evaluated.
  double scale = 0.0;
  std::vector<double> term_bound(product.size());
  for (std::size_t i = 0; i < product.size(); ++i) {
    const ProductTerm& t = product[i];
    const double e = t.u_exp + t.m_exp;
    term_bound[i] = std::fabs(t.coef) * std::pow(start, 1.0 - e) / (e - 1.0);
    scale += term_bound[i];
  }

  CompensatedSum tail;
  double slack = 0.0;
  for (std::size_t i = 0; i < product.size(); ++i) {
    const ProductTerm& t = product[i];
    if (term_bound[i] < 1e-19 * scale) {
      slack += term_bound[i];
      continue;
    }
    if (t.m_exp == 0.0) {
      tail.add(t.coef * std::pow(start, 1.0 - t.u_exp) / (t.u_exp - 1.0));
    } else {
      double local = 0.0;
      const double v = detail::stepped_power_tail(t.u_exp, t.m_exp, tail_start, &local);
      tail.add(t.coef * v);
      slack += std::fabs(t.coef) * local;
    }
  }

  // Expansion remainders: factor i contributes rem_i(u) times a magnitude
  // bound of every other factor ([u]+1 >= u makes lattice bounds valid in u).
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].rem_coef == 0.0) continue;
    double coef = parts[i].rem_coef;
    double expnt = parts[i].rem_expnt;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j == i) continue;
      coef *= parts[j].magnitude;
      expnt += parts[j].lead;
    }
    slack += coef * std::pow(start, 1.0 - expnt) / (expnt - 1.0);
  }

  return {tail.value(), slack};
}

}  // namespace

QuadratureResult integrate_product(const std::vector<IntegrandFactor>& factors,
                                   const EvaluationConfig& cfg) {
  cfg.validate();
  validate_factors(factors);
  const EvaluationConfig pcfg = point_config(cfg);

  double decay = 0.0;
  for (const IntegrandFactor& f : factors) decay += f.decay();
  const double rel_tol_used =
      decay <= 1.25 ? std::max(cfg.rel_tol, 1e-6) : cfg.rel_tol;

  const GaussRule low = gauss_rule(cfg.quad_order);
  const GaussRule high = gauss_rule(cfg.quad_order + 10);

  CompensatedSum value;
  double quad_error = 0.0;
  long long done = 1;  // segments [1, done] are integrated
  long long tail_start = std::min<long long>(32, cfg.max_segments + 1);

  for (;;) {
    for (; done < tail_start; ++done) {
      const SegmentValue seg = integrate_segment(factors, done, low, high, pcfg);
      value.add(seg.value);
      quad_error += seg.error;
    }
    const TailEstimate tail = tail_estimate(factors, tail_start, cfg);
    const double total = value.value() + tail.value;
    const double reported = quad_error + tail.bound;
    if (reported <= rel_tol_used * std::fabs(total)) {
      QuadratureResult r;
      r.value = total;
      r.quad_error = quad_error;
      r.tail_bound = tail.bound;
      r.segments_used = static_cast<int>(tail_start - 1);
      r.rel_tol_used = rel_tol_used;
      return r;
    }
    if (tail_start - 1 >= cfg.max_segments) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "integrate_product: error %.3e misses tolerance %.3e at the "
                    "segment cap",
                    reported, rel_tol_used * std::fabs(total));
      throw accuracy_error(msg);
    }
    tail_start = std::min<long long>(2 * tail_start, cfg.max_segments + 1);
  }
}

double smooth_pair_closed_form(double a, double b, const EvaluationConfig& cfg) {
  cfg.validate();
  if (!(a > 1.0))
    throw domain_error("smooth_pair_closed_form requires a > 1");
  const double gap = b - a;
  const long long g = std::llround(gap);
  if (!(gap > 0.0) || std::fabs(gap - static_cast<double>(g)) > 1e-9 || g % 2 == 0)
    throw domain_error(
        "smooth_pair_closed_form requires b - a to be an odd positive integer");

  // Innermost pair has gap 1: I(s, s+1) = zeta(s)^2 / (2s).
  const long long depth = (g - 1) / 2;
  const double mid = a + static_cast<double>(depth);
  double val = riemann_zeta(mid, cfg);
  val = val * val / (2.0 * mid);
  for (long long i = depth - 1; i >= 0; --i) {
    const double ai = a + static_cast<double>(i);
    const double bi = b - static_cast<double>(i);
    val = riemann_zeta(ai, cfg) * riemann_zeta(bi - 1.0, cfg) / (bi - 1.0) -
          ai / (bi - 1.0) * val;
  }
  return val;
}

}  // namespace mzeta
