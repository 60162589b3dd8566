#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <apery/errors.hpp>
#include <apery/trig_moments.hpp>

#include <random>

#include "test_helpers.hpp"

using namespace apery;

namespace {
const HarmonicTables& tables() {
  static HarmonicTables t(16, 8, 16);
  return t;
}
}  // namespace

TEST_CASE("moment_multi_angle closed forms") {
  CHECK(moment_multi_angle(0, Trig::cos, 0) == QPiPoly::half_pi_power(1));
  CHECK(moment_multi_angle(0, Trig::sin, 0).is_zero());
  CHECK(moment_multi_angle(2, Trig::cos, 2) ==
        QPiPoly::pi_power(1, rational(-1, 4)));
  CHECK(moment_multi_angle(1, Trig::sin, 1) == QPiPoly(rational(1)));
}

TEST_CASE("moment_multi_angle against numeric quadrature spot values") {
  // int_0^{pi/2} x^3 sin(2x) dx = pi^3/16 - 3 pi/8 (by parts, twice;
  // numeric value 0.75979504742... checked by quadrature)
  QPiPoly m = moment_multi_angle(3, Trig::sin, 2);
  QPiPoly expect = QPiPoly::pi_power(3, rational(1, 16)) +
                   QPiPoly::pi_power(1, rational(-3, 8));
  CHECK(m == expect);

  PrecisionContext ctx{28, 10};
  Real frozen = Real::parse("0.759795047422566296543778422964", ctx.bits());
  CHECK(testing::close(m.to_real(ctx), frozen, 28));

  Real c23 = moment_multi_angle(2, Trig::cos, 3).to_real(ctx);
  CHECK(testing::close(c23, Real::parse("-0.748392959350039144162133509249", ctx.bits()), 28));
  Real s41 = moment_multi_angle(4, Trig::sin, 1).to_real(ctx);
  CHECK(testing::close(s41, Real::parse("1.8040264970723912261864369342", ctx.bits()), 27));
}

TEST_CASE("trig_power_expand small cases") {
  TrigExpansion c2 = trig_power_expand(Trig::cos, 2);
  CHECK(c2.basis == Trig::cos);
  CHECK(c2.terms == std::map<unsigned, Rational>{{0, rational(1, 2)},
                                                 {2, rational(1, 2)}});

  TrigExpansion c1 = trig_power_expand(Trig::cos, 1);
  CHECK(c1.basis == Trig::cos);
  CHECK(c1.terms == std::map<unsigned, Rational>{{1, rational(1)}});

  TrigExpansion s3 = trig_power_expand(Trig::sin, 3);
  CHECK(s3.basis == Trig::sin);
  CHECK(s3.terms == std::map<unsigned, Rational>{{1, rational(3, 4)},
                                                 {3, rational(-1, 4)}});

  TrigExpansion s2 = trig_power_expand(Trig::sin, 2);
  CHECK(s2.basis == Trig::cos);
  CHECK(s2.terms == std::map<unsigned, Rational>{{0, rational(1, 2)},
                                                 {2, rational(-1, 2)}});

  CHECK_THROWS_AS(trig_power_expand(Trig::cos, 0), DomainViolation);
}

TEST_CASE("trig_power_expand pointwise at random x to 30 digits") {
  PrecisionContext ctx{30, 10};
  const mpfr_prec_t p = ctx.bits();
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<long> dist(1, 999999);

  for (int sample = 0; sample < 10; ++sample) {
    Real x = Real::pi(p) * dist(rng) / 2000000;  // x in (0, pi/2)
    for (unsigned q = 1; q <= 8; ++q) {
      for (Trig trig : {Trig::cos, Trig::sin}) {
        TrigExpansion ex = trig_power_expand(trig, q);
        Real acc = Real::of(0L, p);
        for (const auto& [freq, coeff] : ex.terms) {
          Real angle = x * static_cast<long>(freq);
          Real basis = ex.basis == Trig::cos ? cos(angle) : sin(angle);
          acc += Real::of(coeff, p) * basis;
        }
        Real direct = pow(trig == Trig::cos ? cos(x) : sin(x), q);
        CHECK(testing::close(acc, direct, 30));
      }
    }
  }
}

TEST_CASE("moment_trig_power examples") {
  CHECK(moment_trig_power(0, Trig::cos, 2) ==
        QPiPoly::pi_power(1, rational(1, 4)));
  CHECK(moment_trig_power(2, Trig::cos, 2) ==
        QPiPoly::pi_power(3, rational(1, 48)) +
            QPiPoly::pi_power(1, rational(-1, 8)));
  CHECK(moment_trig_power(1, Trig::sin, 1) == QPiPoly(rational(1)));
}

TEST_CASE("pure even cosine moment equals central ratio times pi/2") {
  for (long n = 1; n <= 8; ++n) {
    QPiPoly expect =
        QPiPoly::half_pi_power(1) * tables().central_ratio(n);
    CHECK(moment_trig_power(0, Trig::cos, 2 * n) == expect);
  }
}

TEST_CASE("lemma 2.1 sides: anchors") {
  auto [l1, r1] = lemma21_sides(LemmaPart::i, 0, 1, tables());
  CHECK(l1 == QPiPoly::half_pi_power(1));
  CHECK(r1 == QPiPoly::half_pi_power(1));

  auto [l2, r2] = lemma21_sides(LemmaPart::i, 1, 1, tables());
  QPiPoly expect = QPiPoly::pi_power(3, rational(1, 24)) +
                   QPiPoly::pi_power(1, rational(-1, 4));
  CHECK(l2 == expect);
  CHECK(r2 == expect);

  auto [l3, r3] = lemma21_sides(LemmaPart::iii, 0, 0, tables());
  CHECK(l3.is_zero());
  CHECK(r3.is_zero());
}

TEST_CASE("lemma 2.1 equality on a small grid") {
  for (long m = 0; m <= 3; ++m) {
    for (long n = 0; n <= 4; ++n) {
      if (n >= 1) {
        auto s = lemma21_sides(LemmaPart::i, m, n, tables());
        CHECK(s.lhs == s.rhs);
      }
      if (m >= 1 && n >= 1) {
        auto s = lemma21_sides(LemmaPart::ii, m, n, tables());
        CHECK(s.lhs == s.rhs);
      }
      {
        auto s = lemma21_sides(LemmaPart::iii, m, n, tables());
        CHECK(s.lhs == s.rhs);
      }
      if (m >= 1) {
        auto s = lemma21_sides(LemmaPart::iv, m, n, tables());
        CHECK(s.lhs == s.rhs);
      }
    }
  }
}

TEST_CASE("lemma 2.1 domain violations") {
  CHECK_THROWS_AS(lemma21_sides(LemmaPart::i, -1, 1, tables()),
                  DomainViolation);
  CHECK_THROWS_AS(lemma21_sides(LemmaPart::i, 0, 0, tables()),
                  DomainViolation);
  CHECK_THROWS_AS(lemma21_sides(LemmaPart::ii, 0, 1, tables()),
                  DomainViolation);
  CHECK_THROWS_AS(lemma21_sides(LemmaPart::iv, 0, 1, tables()),
                  DomainViolation);
}

TEST_CASE("lemma 2.2 sides: anchors") {
  // (i, m=0): both sides (pi/2) C(2n,n)/4^n
  for (long n = 1; n <= 8; ++n) {
    auto s = lemma22_sides(LemmaPart::i, 0, n, tables());
    CHECK(s.lhs == QPiPoly::half_pi_power(1) * tables().central_ratio(n));
    CHECK(s.lhs == s.rhs);
  }

  auto s11 = lemma22_sides(LemmaPart::i, 1, 1, tables());
  QPiPoly expect = QPiPoly::pi_power(3, rational(1, 48)) +
                   QPiPoly::pi_power(1, rational(-1, 8));
  CHECK(s11.lhs == expect);
  CHECK(s11.rhs == expect);

  // (iv, m=2, n=1): 3 pi^2/4 - 6 on both sides
  auto s21 = lemma22_sides(LemmaPart::iv, 2, 1, tables());
  QPiPoly expect_iv = QPiPoly::pi_power(2, rational(3, 4)) +
                      QPiPoly(rational(-6));
  CHECK(s21.lhs == expect_iv);
  CHECK(s21.rhs == expect_iv);
}

TEST_CASE("lemma 2.2 equality on a small grid") {
  for (long m = 0; m <= 3; ++m) {
    for (long n = 1; n <= 4; ++n) {
      auto a = lemma22_sides(LemmaPart::i, m, n, tables());
      CHECK(a.lhs == a.rhs);
      auto b = lemma22_sides(LemmaPart::ii, m, n, tables());
      CHECK(b.lhs == b.rhs);
      if (m >= 1) {
        auto c = lemma22_sides(LemmaPart::iii, m, n, tables());
        CHECK(c.lhs == c.rhs);
        auto d = lemma22_sides(LemmaPart::iv, m, n, tables());
        CHECK(d.lhs == d.rhs);
      }
    }
  }
}

TEST_CASE("lemma 2.2 proof recurrence holds exactly") {
  // I_{m,n} = ratio(n) * ((pi/2)^{2m+1}/(2m+1)
  //           - (2m)(2m-1)/4 * sum_{n1<=n} 4^{n1}/(n1^2 C(2n1,n1)) I_{m-1,n1})
  for (long m = 1; m <= 4; ++m) {
    for (long n = 1; n <= 6; ++n) {
      QPiPoly sum;
      for (long n1 = 1; n1 <= n; ++n1) {
        Rational w = 1 / (Rational(n1 * n1) * tables().central_ratio(n1));
        sum += moment_trig_power(2 * (m - 1), Trig::cos, 2 * n1) * w;
      }
      QPiPoly rhs = QPiPoly::half_pi_power(2 * m + 1) * rational(1, 2 * m + 1);
      rhs -= sum * rational(2 * m * (2 * m - 1), 4);
      rhs *= tables().central_ratio(n);
      CHECK(moment_trig_power(2 * m, Trig::cos, 2 * n) == rhs);
    }
  }
}

TEST_CASE("lemma 2.2 domain violations") {
  CHECK_THROWS_AS(lemma22_sides(LemmaPart::i, 0, 0, tables()),
                  DomainViolation);
  CHECK_THROWS_AS(lemma22_sides(LemmaPart::iii, 0, 1, tables()),
                  DomainViolation);
  CHECK_THROWS_AS(lemma22_sides(LemmaPart::iv, 1, 0, tables()),
                  DomainViolation);
}
