#pragma once

// Brute-force reference implementations used only by the tests. They stay
// independent of the library's evaluation paths: plain truncated summation
// with elementary tail corrections or explicit truncation bounds.

#include <cmath>
#include <utility>

namespace oracles {

inline void comp_add(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x))
    comp += (sum - t) + x;
  else
    comp += (x - t) + sum;
  sum = t;
}

// zeta(s, alpha) by direct summation of `terms` terms plus the integral tail
// x^(1-s)/(s-1) and the midpoint half term x^(-s)/2 at x = terms + alpha.
inline double naive_hurwitz(double s, double alpha, long long terms = 1000000) {
  double sum = 0.0, comp = 0.0;
  for (long long n = 0; n < terms; ++n)
    comp_add(sum, comp, std::pow(static_cast<double>(n) + alpha, -s));
  const double x = static_cast<double>(terms) + alpha;
  comp_add(sum, comp, std::pow(x, 1.0 - s) / (s - 1.0));
  comp_add(sum, comp, 0.5 * std::pow(x, -s));
  return sum + comp;
}

// Truncated double sum over 1 <= n1 < n2 <= m, together with an upper bound
// on the discarded part. The truncated sum underestimates the true value.
struct BoundedValue {
  double value;
  double missing_bound;
};

inline BoundedValue brute_zeta2(double s1, double s2, long long m) {
  double sum = 0.0, comp = 0.0;
  double h = 0.0, hc = 0.0;  // running sum_{n1 < n2} n1^-s1
  for (long long n2 = 2; n2 <= m; ++n2) {
    comp_add(h, hc, std::pow(static_cast<double>(n2 - 1), -s1));
    comp_add(sum, comp, std::pow(static_cast<double>(n2), -s2) * (h + hc));
  }
  // missing part: sum_{n2 > m} n2^-s2 H(n2-1) with H(n) <= 1 + ln n for
  // s1 = 1 and H(n) <= zeta(s1) <= 1 + 1/(s1-1) otherwise
  const double dm = static_cast<double>(m);
  double bound;
  if (s1 > 1.0) {
    const double hcap = 1.0 + 1.0 / (s1 - 1.0);
    bound = hcap * (std::pow(dm, 1.0 - s2) / (s2 - 1.0) + std::pow(dm, -s2));
  } else {
    // integral of u^-s2 (1 + ln u) over [m, inf) plus one edge term
    const double a = s2 - 1.0;
    bound = std::pow(dm, -a) * ((1.0 + std::log(dm)) / a + 1.0 / (a * a)) +
            std::pow(dm, -s2) * (1.0 + std::log(dm));
  }
  return {sum + comp, bound};
}

// Truncated triple sum over 1 <= n1 < n2 < n3 <= m (no tail correction).
inline double brute_zeta3(double s1, double s2, double s3, long long m) {
  double sum = 0.0, comp = 0.0;
  double h1 = 0.0, h1c = 0.0;
  for (long long n2 = 2; n2 < m; ++n2) {
    comp_add(h1, h1c, std::pow(static_cast<double>(n2 - 1), -s1));
    double inner = 0.0, innerc = 0.0;
    for (long long n3 = n2 + 1; n3 <= m; ++n3)
      comp_add(inner, innerc, std::pow(static_cast<double>(n3), -s3));
    comp_add(sum, comp,
             (h1 + h1c) * std::pow(static_cast<double>(n2), -s2) * (inner + innerc));
  }
  return sum + comp;
}

// Truncated Tornheim double sum over n1, n2 <= m with a bound on the missing
// strips, valid for s1, s2 > 1 (the only brute-checked cases): in the strip
// n1 > m use (n1+n2)^-s3 <= n1^-s3 and sum n2 freely, and symmetrically.
inline BoundedValue brute_tornheim(double s1, double s2, double s3, long long m) {
  double sum = 0.0, comp = 0.0;
  for (long long n1 = 1; n1 <= m; ++n1)
    for (long long n2 = 1; n2 <= m; ++n2)
      comp_add(sum, comp,
               std::pow(static_cast<double>(n1), -s1) *
                   std::pow(static_cast<double>(n2), -s2) *
                   std::pow(static_cast<double>(n1 + n2), -s3));
  const double dm = static_cast<double>(m);
  const double z1cap = 1.0 + 1.0 / (s1 - 1.0);
  const double z2cap = 1.0 + 1.0 / (s2 - 1.0);
  const double strip1 =
      z2cap * (std::pow(dm, 1.0 - s1 - s3) / (s1 + s3 - 1.0) + std::pow(dm, -s1 - s3));
  const double strip2 =
      z1cap * (std::pow(dm, 1.0 - s2 - s3) / (s2 + s3 - 1.0) + std::pow(dm, -s2 - s3));
  return {sum + comp, strip1 + strip2};
}

}  // namespace oracles
