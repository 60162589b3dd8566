#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <apery/errors.hpp>
#include <apery/harmonic_tables.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace apery;

namespace {
const HarmonicTables& tables() {
  static HarmonicTables t(64, 8, 16);
  return t;
}
}  // namespace

TEST_CASE("empty-depth convention") {
  for (long n = 0; n <= 64; ++n) {
    CHECK(tables().zeta_star(n, 0) == 1);
    CHECK(tables().t_star(n, 0) == 1);
  }
}

TEST_CASE("exact spot values") {
  CHECK(tables().zeta_star(7, 0) == 1);
  CHECK(tables().zeta_star(2, 1) == rational(5, 4));
  CHECK(tables().zeta_star(2, 2) == rational(21, 16));

  CHECK(tables().t_star(1, 3) == 1);
  CHECK(tables().t_star(2, 1) == rational(10, 9));
  CHECK(tables().t_star(3, 1) == rational(259, 225));

  CHECK(tables().odd_harmonic(1, 5, false) == 1);
  CHECK(tables().odd_harmonic(1, 5, true) == 1);
  CHECK(tables().odd_harmonic(2, 1, false) == rational(4, 3));
  CHECK(tables().odd_harmonic(3, 2, true) == rational(209, 225));
  CHECK(tables().odd_harmonic(0, 3, false) == 0);

  CHECK(tables().central_ratio(0) == 1);
  CHECK(tables().central_ratio(1) == rational(1, 2));
  CHECK(tables().central_ratio(2) == rational(3, 8));

  CHECK(tables().nested_S(1, 1) == 2);
  CHECK(tables().nested_S(2, 1) == rational(8, 3));
  CHECK(tables().nested_S(3, 0) == rational(16, 5));

  CHECK(tables().nested_T(1, 1) == 1);
  CHECK(tables().nested_T(1, 2) == 1);
  CHECK(tables().nested_T(2, 1) == rational(7, 6));
}

TEST_CASE("one-step recurrences hold exactly on the full grid") {
  for (long n = 1; n <= 64; ++n) {
    for (int j = 1; j <= 8; ++j) {
      CHECK(tables().zeta_star(n, j) ==
            tables().zeta_star(n - 1, j) +
                rational(1, n * n) * tables().zeta_star(n, j - 1));
      CHECK(tables().t_star(n, j) ==
            tables().t_star(n - 1, j) +
                rational(1, (2 * n - 1) * (2 * n - 1)) *
                    tables().t_star(n, j - 1));
      CHECK(tables().nested_S(n, j) ==
            tables().nested_S(n - 1, j) +
                rational(1, n * n) * tables().nested_S(n, j - 1));
      if (j >= 2) {
        CHECK(tables().nested_T(n, j) ==
              tables().nested_T(n - 1, j) +
                  rational(1, (2 * n - 1) * (2 * n - 1)) *
                      tables().nested_T(n, j - 1));
      }
    }
    CHECK(tables().central_ratio(n) ==
          tables().central_ratio(n - 1) * rational(2 * n - 1, 2 * n));
  }
}

TEST_CASE("brute-force chain enumeration oracle, n <= 5, j <= 3") {
  for (long n = 0; n <= 5; ++n) {
    for (int j = 0; j <= 3; ++j) {
      CHECK(tables().zeta_star(n, j) == oracle::zeta_star_chains(n, j));
      CHECK(tables().t_star(n, j) == oracle::t_star_chains(n, j));
      CHECK(tables().nested_S(n, j) == oracle::nested_S_chains(n, j));
      if (j >= 1) {
        CHECK(tables().nested_T(n, j) == oracle::nested_T_chains(n, j));
      }
    }
    for (int m = 1; m <= 5; ++m) {
      CHECK(tables().odd_harmonic(n, m, false) ==
            oracle::odd_harmonic_direct(n, m, false));
      CHECK(tables().odd_harmonic(n, m, true) ==
            oracle::odd_harmonic_direct(n, m, true));
    }
  }
}

TEST_CASE("plain tables are nondecreasing in n") {
  for (long n = 1; n <= 64; ++n) {
    for (int j = 0; j <= 8; ++j) {
      CHECK(tables().zeta_star(n, j) >= tables().zeta_star(n - 1, j));
      CHECK(tables().t_star(n, j) >= tables().t_star(n - 1, j));
      if (j >= 1) {
        CHECK(tables().nested_S(n, j) >= tables().nested_S(n - 1, j));
        CHECK(tables().nested_T(n, j) >= tables().nested_T(n - 1, j));
      }
    }
  }
}

TEST_CASE("lemma 2.2(iv) cross-check forces nested_T(1,1) = 1") {
  // (1/2) * (4/2) * T_1(1) = 1  <=>  T_1(1) = 1
  CHECK(rational(1, 2) * rational(4, 2) * tables().nested_T(1, 1) == 1);
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(tables().zeta_star(65, 0), CapacityError);
  CHECK_THROWS_AS(tables().zeta_star(3, 9), CapacityError);
  CHECK_THROWS_AS(tables().nested_T(3, 0), CapacityError);
  CHECK_THROWS_AS(tables().odd_harmonic(3, 17, false), CapacityError);
  CHECK_THROWS_AS(tables().central_ratio(-1), CapacityError);
}

TEST_CASE("float mirror agrees with exact tables") {
  PrecisionContext ctx{30, 10};
  FloatHarmonic fh(ctx, 200);
  HarmonicTables exact(64, 4, 6);
  for (long n : {1L, 7L, 33L, 50L}) {
    for (int j = 0; j <= 3; ++j) {
      CHECK(testing::close(fh.zeta_star(n, j),
                           Real::of(exact.zeta_star(n, j), ctx.bits()), 30));
      CHECK(testing::close(fh.t_star(n, j),
                           Real::of(exact.t_star(n, j), ctx.bits()), 30));
      CHECK(testing::close(fh.nested_S(n, j),
                           Real::of(exact.nested_S(n, j), ctx.bits()), 30));
      if (j >= 1)
        CHECK(testing::close(fh.nested_T(n, j),
                             Real::of(exact.nested_T(n, j), ctx.bits()), 30));
    }
    for (int m = 1; m <= 5; ++m) {
      CHECK(testing::close(
          fh.odd_harmonic(n, m, true),
          Real::of(exact.odd_harmonic(n, m, true), ctx.bits()), 30));
    }
    CHECK(testing::close(fh.central_ratio(n),
                         Real::of(exact.central_ratio(n), ctx.bits()), 30));
  }
}

TEST_CASE("float tables beyond the exact seed range") {
  PrecisionContext ctx{30, 10};

  // zeta_star(10^4, 1) stays below zeta(2) and is close to it
  FloatHarmonic fh(ctx, 10000);
  Real z = fh.zeta_star(10000, 1);
  Real zeta2 = Real::pi(ctx.bits()) * Real::pi(ctx.bits()) / 6;
  CHECK(z < zeta2);
  CHECK(zeta2 - z < Real::of(0.00011, ctx.bits()));

  // central_ratio(10^5) ~ 1/sqrt(pi n), within 1%
  FloatHarmonic fh2(ctx, 100000);
  Real r = fh2.central_ratio(100000);
  CHECK(r.sign() > 0);
  Real bound = Real::of(1.01, ctx.bits()) /
               sqrt(Real::pi(ctx.bits()) * 100000L);
  CHECK(r < bound);

  // t_star(n, 1) increases monotonically toward lambda(2) = pi^2/8
  Real lambda2 = Real::pi(ctx.bits()) * Real::pi(ctx.bits()) / 8;
  Real prev = fh.t_star(100, 1);
  for (long n : {300L, 1000L, 5000L, 10000L}) {
    Real cur = fh.t_star(n, 1);
    CHECK(cur > prev);
    CHECK(cur < lambda2);
    prev = cur;
  }
}

TEST_CASE("harmonic_float facade") {
  PrecisionContext ctx{20, 10};
  CHECK(testing::close(harmonic_float(HarmonicKind::zeta_star, 2, 1, ctx),
                       Real::of(rational(5, 4), ctx.bits()), 20));
  CHECK(testing::close(harmonic_float(HarmonicKind::central_ratio, 2, 0, ctx),
                       Real::of(rational(3, 8), ctx.bits()), 20));
  CHECK(testing::close(harmonic_float(HarmonicKind::nested_T, 2, 1, ctx),
                       Real::of(rational(7, 6), ctx.bits()), 20));
}
