#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <apery/qpi_poly.hpp>
#include <apery/rational.hpp>

#include <random>

#include "test_helpers.hpp"

using namespace apery;

TEST_CASE("rational canonical form") {
  Rational q = rational(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(rational(0, 7) == 0);
  CHECK(rational(0, 7).get_den() == 1);

  // arithmetic re-canonicalizes
  Rational a = rational(1, 6) + rational(1, 3);
  CHECK(a.get_num() == 1);
  CHECK(a.get_den() == 2);
}

TEST_CASE("big integer combinatorics") {
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(16, 8) == 12870);
  CHECK(factorial(12) == BigInt("479001600"));
  CHECK(int_pow(4, 10) == BigInt("1048576"));
  CHECK(rat_pow(rational(2, 3), 3) == rational(8, 27));
}

TEST_CASE("qpi arithmetic examples") {
  QPiPoly half_pi = QPiPoly::half_pi_power(1);
  CHECK(half_pi * half_pi == QPiPoly::pi_power(2, rational(1, 4)));

  QPiPoly one_plus_pi = QPiPoly(rational(1)) + QPiPoly::pi_power(1, rational(1));
  QPiPoly one_minus_pi = QPiPoly(rational(1)) - QPiPoly::pi_power(1, rational(1));
  CHECK(one_plus_pi + one_minus_pi == QPiPoly(rational(2)));

  // 2! * (1/2) * ((pi/2)^3/6 - (1/4)(pi/2)) = pi^3/48 - pi/8
  QPiPoly inner = QPiPoly::half_pi_power(3) * rational(1, 6) -
                  QPiPoly::half_pi_power(1) * rational(1, 4);
  QPiPoly lhs = inner * Rational(factorial(2)) * rational(1, 2);
  QPiPoly expect = QPiPoly::pi_power(3, rational(1, 48)) -
                   QPiPoly::pi_power(1, rational(1, 8));
  CHECK(lhs == expect);

  // cross-check by numeric embedding at 50 digits
  PrecisionContext ctx{50, 10};
  Real pi = Real::pi(ctx.bits());
  Real direct = pow(pi, 3) / 48 - pi / 8;
  CHECK(testing::close(lhs.to_real(ctx), direct, 50));
}

TEST_CASE("qpi ring axioms on random small elements") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<unsigned> deg(0, 3);

  auto random_poly = [&] {
    QPiPoly p;
    for (int t = 0; t < 3; ++t)
      p += QPiPoly::pi_power(deg(rng), rational(num(rng), den(rng)));
    return p;
  };

  for (int iter = 0; iter < 200; ++iter) {
    QPiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == QPiPoly{});
  }
}

TEST_CASE("qpi no stored zero coefficients") {
  QPiPoly p = QPiPoly::pi_power(2, rational(1)) - QPiPoly::pi_power(2, rational(1));
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  QPiPoly q = QPiPoly::pi_power(1, rational(3)) * Rational(0);
  CHECK(q.is_zero());
}

TEST_CASE("qpi_to_real examples") {
  PrecisionContext ctx{20, 10};
  CHECK(QPiPoly{}.to_real(ctx).is_zero());

  // pi/2 at 20 digits
  Real half_pi = QPiPoly::half_pi_power(1).to_real(ctx);
  Real expect = Real::parse("1.57079632679489661923132", ctx.bits());
  CHECK(testing::close(half_pi, expect, 20));

  // pi^3/24 - pi/4 at 30 digits; reference value frozen from the
  // double-exponential quadrature of int_0^{pi/2} x^2 (1 + cos 2x) dx
  // (see test_series_integrals).
  PrecisionContext ctx30{30, 10};
  QPiPoly p = QPiPoly::pi_power(3, rational(1, 24)) -
              QPiPoly::pi_power(1, rational(1, 4));
  Real frozen = Real::parse("0.506530031615044197695852281976", ctx30.bits());
  CHECK(testing::close(p.to_real(ctx30), frozen, 29));
}

TEST_CASE("qpi rendering is deterministic") {
  QPiPoly p = QPiPoly::pi_power(3, rational(1, 24)) -
              QPiPoly::pi_power(1, rational(1, 4));
  CHECK(p.str() == "-(1/4)*pi + (1/24)*pi^3");
  CHECK(QPiPoly{}.str() == "0");
  CHECK(QPiPoly(rational(-2)).str() == "-(2)");
  CHECK(QPiPoly::pi_power(1, rational(1)).str() == "pi");
}
