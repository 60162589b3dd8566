#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <apery/quadrature.hpp>
#include <apery/special_functions.hpp>

#include "test_helpers.hpp"

using namespace apery;

namespace {
const PrecisionContext ctx{25, 10};
const mpfr_prec_t P = ctx.bits();
}  // namespace

TEST_CASE("de_quadrature elementary integrals") {
  // int_0^1 dt/(1+t) = ln 2
  auto r1 = de_quadrature(
      [](const Real& t, const Real&) { return 1 / (1 + t); }, ctx);
  CHECK(testing::close(r1.value, Real::ln2(P), 25));
  CHECK(r1.error_bound <= abs(r1.value) * Real::pow10(-27, P));

  // int_0^1 ln t dt = -1 (endpoint log singularity)
  auto r2 = de_quadrature(
      [](const Real& t, const Real&) { return log(t); }, ctx);
  CHECK(testing::close(r2.value, Real::of(-1L, P), 25));

  // int_0^1 (1/2) ln t/(1 - t/2) dt = -Li_2(1/2)
  auto r3 = de_quadrature(
      [](const Real& t, const Real&) {
        return ldexp(log(t), -1) / (1 - ldexp(t, -1));
      },
      ctx);
  Real expect = Real::parse("-0.58224052646501250590265632", P);
  CHECK(testing::close(r3.value, expect, 25));
}

TEST_CASE("de_quadrature handles two-sided singular structure") {
  // int_0^1 ln(t) ln(1-t) dt = 2 - pi^2/6 (log singularities both ends;
  // the 1-t argument must come through the stable channel)
  auto r = de_quadrature(
      [](const Real& t, const Real& omt) { return log(t) * log(omt); }, ctx);
  Real expect = 2 - Real::pi(P) * Real::pi(P) / 6;
  CHECK(testing::close(r.value, expect, 25));
}

TEST_CASE("de_quadrature self-consistency bound") {
  auto r = de_quadrature(
      [](const Real& t, const Real&) { return exp(t) / (1 + t * t); }, ctx);
  // reported bound is the last level difference; must certify 10^-(digits+2)
  CHECK(r.error_bound <= abs(r.value) * Real::pow10(-(ctx.digits + 2), P) +
                             Real::pow10(-(ctx.working_digits() + 8), P));
  CHECK(r.levels <= 10);
}

TEST_CASE("de_quadrature_upto scales the interval") {
  Real half = Real::of(0.5, P);
  // int_0^{1/2} 1/(1-t) dt = ln 2
  auto r = de_quadrature_upto(
      half, [](const Real& t, const Real&) { return 1 / (1 - t); }, ctx);
  CHECK(testing::close(r.value, Real::ln2(P), 24));
}

TEST_CASE("derivative ladder reproduced by the integrator") {
  // chi_s(x) = int_0^x chi_{s-1}(t)/t dt and Ti the same, at x in {1/2, 1}
  PrecisionContext cx{20, 10};
  const mpfr_prec_t q = cx.bits();
  for (int s : {2, 3}) {
    for (double xv : {0.5, 1.0}) {
      Real x = Real::of(xv, q);
      auto integ = de_quadrature_upto(
          x,
          [&](const Real& t, const Real& omt) {
            if (s == 2) {
              // chi_1 = arctanh written through the stable 1-t channel so
              // the integrable log blow-up at t -> 1 stays finite at nodes
              return (log1p(t) - log(omt)) / ldexp(t, 1);
            }
            return chi(s - 1, t, cx) / t;
          },
          cx);
      CHECK(testing::close(integ.value, chi(s, x, cx), cx.digits - 2));
    }
  }
  for (int m : {1, 2, 3}) {
    for (double xv : {0.5, 1.0}) {
      Real x = Real::of(xv, q);
      auto integ = de_quadrature_upto(
          x,
          [&](const Real& t, const Real&) {
            return t.is_zero() ? Real::of(0L, q) : ti(m - 1, t, cx) / t;
          },
          cx);
      CHECK(testing::close(integ.value, ti(m, x, cx), cx.digits - 2));
    }
  }
}
