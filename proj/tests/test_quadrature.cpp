#include <cmath>
#include <vector>

#include <doctest.h>

#include "mzeta/errors.hpp"
#include "mzeta/hurwitz.hpp"
#include "mzeta/quadrature.hpp"
#include "oracles.hpp"

using namespace mzeta;

namespace {

double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

using Factors = std::vector<IntegrandFactor>;

}  // namespace

TEST_CASE("elementary power integral") {
  const QuadratureResult q = integrate_product({IntegrandFactor::power(2.0)});
  CHECK(rel_diff(q.value, 1.0) <= 1e-12);
  CHECK(q.total_error() <= 1e-10);
}

TEST_CASE("pair closed form zeta(s)^2/(2s)") {
  for (double s : {1.5, 2.0, 3.0, 5.0}) {
    const QuadratureResult q = integrate_product(
        {IntegrandFactor::smooth(s), IntegrandFactor::smooth(s + 1.0)});
    const double z = riemann_zeta(s);
    CAPTURE(s);
    CHECK(rel_diff(q.value, z * z / (2.0 * s)) <= 1e-9);
  }
}

TEST_CASE("triple closed form zeta(s)^3/(3s)") {
  for (double s : {2.0, 3.0}) {
    const QuadratureResult q = integrate_product(
        {IntegrandFactor::smooth(s), IntegrandFactor::smooth(s),
         IntegrandFactor::smooth(s + 1.0)});
    const double z = riemann_zeta(s);
    CAPTURE(s);
    CHECK(rel_diff(q.value, z * z * z / (3.0 * s)) <= 1e-9);
  }
}

TEST_CASE("error honesty against refined recomputation") {
  const std::vector<Factors> cases = {
      {IntegrandFactor::smooth(2.0), IntegrandFactor::smooth(3.0)},
      {IntegrandFactor::smooth(2.0), IntegrandFactor::step(2.0)},
      {IntegrandFactor::smooth(2.0), IntegrandFactor::step(1.5)},
      {IntegrandFactor::step(2.0), IntegrandFactor::step(2.0),
       IntegrandFactor::smooth(3.0)},
      {IntegrandFactor::power(1.5), IntegrandFactor::smooth(2.0)},
  };
  for (const Factors& f : cases) {
    const QuadratureResult base = integrate_product(f);
    EvaluationConfig refined_cfg;
    refined_cfg.quad_order = 40;
    refined_cfg.rel_tol = 1e-13;
    refined_cfg.max_segments = 8192;
    const QuadratureResult refined = integrate_product(f, refined_cfg);
    CHECK(std::fabs(base.value - refined.value) <=
          base.total_error() + refined.total_error());
  }
}

TEST_CASE("step factors sit between the smooth neighbours") {
  // int ζ(a,u) ζ(s,[u]+1) du lies between int with ζ(s,u) and with ζ(s,u+1);
  // the shifted variant expands as smooth minus power since
  // zeta(s, u+1) = zeta(s, u) - u^-s.
  for (auto [a, s] : {std::pair{3.0, 2.0}, {2.0, 2.0}, {2.5, 1.5}}) {
    const double with_step =
        integrate_product({IntegrandFactor::smooth(a), IntegrandFactor::step(s)}).value;
    const double with_smooth =
        integrate_product({IntegrandFactor::smooth(a), IntegrandFactor::smooth(s)}).value;
    const double with_shifted =
        with_smooth -
        integrate_product({IntegrandFactor::smooth(a), IntegrandFactor::power(s)}).value;
    CAPTURE(a);
    CAPTURE(s);
    CHECK(with_smooth >= with_step);
    CHECK(with_step >= with_shifted);
  }
}

TEST_CASE("stepped pair integral against a brute segment sum") {
  // int_1^inf zeta(3,u) zeta(2,[u]+1) du: per segment the antiderivative of
  // zeta(3,u) is -zeta(2,u)/2, so the segment values are exact and the
  // truncated sum brackets the integral from below.
  double sum = 0.0, comp = 0.0;
  const long long m = 2000;
  for (long long n = 1; n < m; ++n) {
    const double seg = 0.5 *
                       (oracles::naive_hurwitz(2.0, static_cast<double>(n), 2000) -
                        oracles::naive_hurwitz(2.0, static_cast<double>(n + 1), 2000)) *
                       oracles::naive_hurwitz(2.0, static_cast<double>(n + 1), 2000);
    oracles::comp_add(sum, comp, seg);
  }
  const QuadratureResult q =
      integrate_product({IntegrandFactor::smooth(3.0), IntegrandFactor::step(2.0)});
  CHECK(q.value > sum + comp);
  CHECK(rel_diff(q.value, sum + comp) < 1e-4);
}

TEST_CASE("slow decay relaxes the effective tolerance and reports it") {
  const QuadratureResult q = integrate_product(
      {IntegrandFactor::smooth(2.0), IntegrandFactor::step(1.25)});
  CHECK(q.rel_tol_used == 1e-6);
  const QuadratureResult fast = integrate_product(
      {IntegrandFactor::smooth(2.0), IntegrandFactor::step(2.0)});
  CHECK(fast.rel_tol_used == EvaluationConfig{}.rel_tol);
}

TEST_CASE("quadrature result bookkeeping") {
  const QuadratureResult q = integrate_product(
      {IntegrandFactor::smooth(2.0), IntegrandFactor::smooth(3.0)});
  CHECK(q.quad_error >= 0.0);
  CHECK(q.tail_bound >= 0.0);
  CHECK(q.total_error() == q.quad_error + q.tail_bound);
  CHECK(q.segments_used >= 8);
  CHECK(q.segments_used <= EvaluationConfig{}.max_segments);
}

TEST_CASE("factor validation") {
  CHECK_THROWS_AS(integrate_product({}), domain_error);
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::smooth(1.0)}), domain_error);
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::step(0.9)}), domain_error);
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::power(0.0)}), domain_error);
  // individually valid but not integrable at infinity: decay = 1
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::power(1.0)}), domain_error);
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::step(1.5),
                                     IntegrandFactor::power(0.5)}),
                  domain_error);
}

TEST_CASE("accuracy error at the segment cap") {
  // rel_tol below the engine's rounding floor cannot be certified
  EvaluationConfig strict;
  strict.quad_order = 4;
  strict.rel_tol = 1e-15;
  strict.max_segments = 8;
  CHECK_THROWS_AS(integrate_product({IntegrandFactor::smooth(2.0),
                                     IntegrandFactor::smooth(3.0)},
                                    strict),
                  accuracy_error);
}

TEST_CASE("odd-gap recurrence base case and examples") {
  const double z2 = riemann_zeta(2.0);
  CHECK(rel_diff(smooth_pair_closed_form(2.0, 3.0), z2 * z2 / 4.0) <= 1e-13);
  // I(2,5) = z(2) z(4)/4 - (2/4) I(3,4) with I(3,4) = z(3)^2/6
  const double z3 = riemann_zeta(3.0), z4 = riemann_zeta(4.0);
  CHECK(rel_diff(smooth_pair_closed_form(2.0, 5.0),
                 z2 * z4 / 4.0 - 0.5 * z3 * z3 / 6.0) <= 1e-13);
  CHECK_THROWS_AS(smooth_pair_closed_form(2.0, 4.0), domain_error);   // even gap
  CHECK_THROWS_AS(smooth_pair_closed_form(2.0, 1.0), domain_error);   // negative
  CHECK_THROWS_AS(smooth_pair_closed_form(1.0, 2.0), domain_error);   // a = 1
  CHECK_THROWS_AS(smooth_pair_closed_form(2.0, 3.5), domain_error);   // not integer
}

TEST_CASE("recurrence agrees with quadrature on odd gaps") {
  for (auto [a, b] : {std::pair{2.0, 5.0}, {3.0, 6.0}, {2.0, 7.0}}) {
    const double rec = smooth_pair_closed_form(a, b);
    const QuadratureResult q =
        integrate_product({IntegrandFactor::smooth(a), IntegrandFactor::smooth(b)});
    CAPTURE(a);
    CAPTURE(b);
    CHECK(rel_diff(rec, q.value) <= 1e-9);
  }
}
