#include "apery/trig_moments.hpp"

#include <string>

#include "apery/errors.hpp"

namespace apery {

namespace {

// sin(a pi/2) and cos(a pi/2) for integer a.
int sin_half_turns(unsigned a) {
  switch (a % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

int cos_half_turns(unsigned a) {
  switch (a % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}

}  // namespace

QPiPoly moment_multi_angle(unsigned p, Trig trig, unsigned a) {
  if (a == 0) {
    if (trig == Trig::sin) return QPiPoly{};
    // int x^p dx = (pi/2)^{p+1} / (p+1)
    return QPiPoly::half_pi_power(p + 1) * rational(1, p + 1);
  }
  const Rational inv_a = rational(1, a);
  if (trig == Trig::cos) {
    // int x^p cos(ax) = (pi/2)^p sin(a pi/2)/a - (p/a) int x^{p-1} sin(ax)
    QPiPoly r;
    int s = sin_half_turns(a);
    if (s != 0) r += QPiPoly::half_pi_power(p) * (inv_a * s);
    if (p > 0)
      r -= moment_multi_angle(p - 1, Trig::sin, a) * (inv_a * Rational(p));
    return r;
  }
  // int x^p sin(ax) = -(pi/2)^p cos(a pi/2)/a + (p/a) int x^{p-1} cos(ax)
  // (the lower limit vanishes for p >= 1; for p = 0 it contributes 1/a).
  QPiPoly r;
  int c = cos_half_turns(a);
  if (c != 0) r -= QPiPoly::half_pi_power(p) * (inv_a * c);
  if (p > 0) {
    r += moment_multi_angle(p - 1, Trig::cos, a) * (inv_a * Rational(p));
  } else {
    r += QPiPoly(inv_a);
  }
  return r;
}

TrigExpansion trig_power_expand(Trig trig, unsigned q) {
  if (q < 1) throw DomainViolation("trig_power_expand requires power q >= 1");

  // Expand ((e^{ix} + e^{-ix})/2)^q resp. ((e^{ix} - e^{-ix})/(2i))^q and
  // collapse conjugate frequency pairs. Coefficients are Gaussian rationals;
  // tracking the power of i explicitly keeps the sign bookkeeping honest.
  struct Complex {
    Rational re, im;
  };
  const unsigned i_power =
      (trig == Trig::sin) ? (4 - q % 4) % 4 : 0;  // i^{-q} for the sine case
  const Rational scale = rational(1) / Rational(int_pow(2, q));

  std::map<long, Complex> expo;  // frequency m -> coefficient of e^{imx}
  for (unsigned k = 0; k <= q; ++k) {
    const long m = 2L * k - static_cast<long>(q);
    Rational amp = Rational(binomial(q, k)) * scale;
    if (trig == Trig::sin && (q - k) % 2 == 1) amp = -amp;
    Complex& slot = expo[m];
    switch (i_power) {
      case 0: slot.re += amp; break;
      case 1: slot.im += amp; break;
      case 2: slot.re -= amp; break;
      case 3: slot.im -= amp; break;
    }
  }

  TrigExpansion out;
  const bool sine_basis = (trig == Trig::sin) && (q % 2 == 1);
  out.basis = sine_basis ? Trig::sin : Trig::cos;

  for (unsigned m = q % 2; m <= q; m += 2) {
    const Complex cp = expo.count(m) ? expo[m] : Complex{};
    const Complex cn =
        (m > 0 && expo.count(-static_cast<long>(m))) ? expo[-static_cast<long>(m)]
                                                     : Complex{};
    // Realness of the collapsed function forces these residues to vanish.
    const Rational resid_im = cp.im + cn.im;
    const Rational resid_re = (m == 0) ? Rational(0) : cp.re - cn.re;
    if (resid_im != 0 || resid_re != 0)
      throw Error("trig_power_expand: conjugate symmetry violated");

    const Rational cos_coeff = (m == 0) ? cp.re : cp.re + cn.re;
    const Rational sin_coeff = (m == 0) ? Rational(0) : cn.im - cp.im;
    if (sine_basis) {
      if (cos_coeff != 0)
        throw Error("trig_power_expand: unexpected cosine component");
      if (sin_coeff != 0) out.terms[m] = sin_coeff;
    } else {
      if (sin_coeff != 0)
        throw Error("trig_power_expand: unexpected sine component");
      if (cos_coeff != 0) out.terms[m] = cos_coeff;
    }
  }
  return out;
}

QPiPoly moment_trig_power(unsigned p, Trig trig, unsigned q) {
  TrigExpansion ex = trig_power_expand(trig, q);
  QPiPoly r;
  for (const auto& [freq, coeff] : ex.terms)
    r += moment_multi_angle(p, ex.basis, freq) * coeff;
  return r;
}

namespace {

QPiPoly lemma21_lhs(LemmaPart part, long m, long n) {
  switch (part) {
    case LemmaPart::i: {
      // int x^{2m} ((-1)^{n-1} + cos(2nx))
      QPiPoly r = QPiPoly::half_pi_power(2 * m + 1) * rational(1, 2 * m + 1) *
                  rational(n % 2 == 1 ? 1 : -1);
      r += moment_multi_angle(2 * m, Trig::cos, 2 * n);
      return r;
    }
    case LemmaPart::ii: {
      QPiPoly r = QPiPoly::half_pi_power(2 * m) * rational(1, 2 * m) *
                  rational(n % 2 == 1 ? 1 : -1);
      r += moment_multi_angle(2 * m - 1, Trig::cos, 2 * n);
      return r;
    }
    case LemmaPart::iii: {
      // kernel ((-1)^{n-1} + cos(2nx))/cos(x) = 2 sum (-1)^{n+k} cos((2k-1)x)
      QPiPoly r;
      for (long k = 1; k <= n; ++k) {
        Rational sign((n + k) % 2 == 0 ? 2 : -2);
        r += moment_multi_angle(2 * m, Trig::cos, 2 * k - 1) * sign;
      }
      return r;
    }
    case LemmaPart::iv: {
      // kernel (1 - cos(2nx))/sin(x) = 2 sum sin((2k-1)x)
      QPiPoly r;
      for (long k = 1; k <= n; ++k)
        r += moment_multi_angle(2 * m - 1, Trig::sin, 2 * k - 1) * rational(2);
      return r;
    }
  }
  throw Error("unreachable lemma part");
}

QPiPoly lemma21_rhs(LemmaPart part, long m, long n,
                    const HarmonicTables& tables) {
  switch (part) {
    case LemmaPart::i: {
      QPiPoly r;
      for (long j = 0; j <= m; ++j) {
        Rational c = Rational(factorial(2 * m)) /
                     (Rational(int_pow(2 * n, 2 * j)) *
                      Rational(factorial(2 * m - 2 * j + 1)));
        if ((j + n - 1) % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j + 1) * c;
      }
      return r;
    }
    case LemmaPart::ii: {
      QPiPoly r;
      for (long j = 0; j <= m - 1; ++j) {
        Rational c = Rational(factorial(2 * m - 1)) /
                     (Rational(int_pow(2 * n, 2 * j)) *
                      Rational(factorial(2 * m - 2 * j)));
        if ((j + n - 1) % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      Rational tail = Rational(factorial(2 * m - 1)) *
                      Rational(n % 2 == 0 ? 0 : 2) /
                      Rational(int_pow(2 * n, 2 * m));
      if (m % 2 != 0) tail = -tail;
      r += QPiPoly(tail);
      return r;
    }
    case LemmaPart::iii: {
      QPiPoly r;
      for (long j = 0; j <= m; ++j) {
        Rational c = Rational(2) * Rational(factorial(2 * m)) *
                     tables.odd_harmonic(n, 2 * j + 1, false) /
                     Rational(factorial(2 * m - 2 * j));
        if ((j + n - 1) % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      return r;
    }
    case LemmaPart::iv: {
      QPiPoly r;
      for (long j = 1; j <= m; ++j) {
        Rational c = Rational(2) * Rational(factorial(2 * m - 1)) *
                     tables.odd_harmonic(n, 2 * j, true) /
                     Rational(factorial(2 * m - 2 * j));
        if ((j - 1) % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      return r;
    }
  }
  throw Error("unreachable lemma part");
}

QPiPoly lemma22_rhs(LemmaPart part, long m, long n,
                    const HarmonicTables& tables) {
  switch (part) {
    case LemmaPart::i: {
      QPiPoly r;
      for (long j = 0; j <= m; ++j) {
        Rational c = Rational(factorial(2 * m)) * tables.zeta_star(n, j) /
                     (Rational(int_pow(2, 2 * j)) *
                      Rational(factorial(2 * m - 2 * j + 1)));
        if (j % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j + 1) * c;
      }
      return r * tables.central_ratio(n);
    }
    case LemmaPart::ii: {
      QPiPoly r;
      for (long j = 0; j <= m; ++j) {
        Rational c = tables.t_star(n, j) / Rational(factorial(2 * m - 2 * j));
        if (j % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      Rational front = Rational(factorial(2 * m)) /
                       (Rational(2 * n) * tables.central_ratio(n));
      return r * front;
    }
    case LemmaPart::iii: {
      QPiPoly r;
      for (long j = 0; j <= m - 1; ++j) {
        Rational c = tables.zeta_star(n, j) /
                     (Rational(int_pow(2, 2 * j)) *
                      Rational(factorial(2 * m - 2 * j)));
        if (j % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      Rational tail =
          tables.nested_S(n, m) / Rational(int_pow(2, 2 * m));
      if (m % 2 != 0) tail = -tail;
      r += QPiPoly(tail);
      return r * Rational(factorial(2 * m - 1)) * tables.central_ratio(n);
    }
    case LemmaPart::iv: {
      QPiPoly r;
      for (long j = 1; j <= m; ++j) {
        Rational c = tables.nested_T(n, j) / Rational(factorial(2 * m - 2 * j));
        if ((j - 1) % 2 != 0) c = -c;
        r += QPiPoly::half_pi_power(2 * m - 2 * j) * c;
      }
      Rational front = Rational(factorial(2 * m - 1)) /
                       (Rational(2 * n) * tables.central_ratio(n));
      return r * front;
    }
  }
  throw Error("unreachable lemma part");
}

void require(bool ok, const std::string& constraint) {
  if (!ok) throw DomainViolation("parameter range: requires " + constraint);
}

}  // namespace

LemmaSides lemma21_sides(LemmaPart part, long m, long n,
                         const HarmonicTables& tables) {
  switch (part) {
    case LemmaPart::i: require(m >= 0 && n >= 1, "m >= 0, n >= 1"); break;
    case LemmaPart::ii: require(m >= 1 && n >= 1, "m >= 1, n >= 1"); break;
    case LemmaPart::iii: require(m >= 0 && n >= 0, "m >= 0, n >= 0"); break;
    case LemmaPart::iv: require(m >= 1 && n >= 0, "m >= 1, n >= 0"); break;
  }
  return {lemma21_lhs(part, m, n), lemma21_rhs(part, m, n, tables)};
}

LemmaSides lemma22_sides(LemmaPart part, long m, long n,
                         const HarmonicTables& tables) {
  switch (part) {
    case LemmaPart::i:
    case LemmaPart::ii:
      require(m >= 0 && n >= 1, "m >= 0, n >= 1");
      break;
    case LemmaPart::iii:
    case LemmaPart::iv:
      require(m >= 1 && n >= 1, "m >= 1, n >= 1");
      break;
  }
  QPiPoly lhs;
  switch (part) {
    case LemmaPart::i: lhs = moment_trig_power(2 * m, Trig::cos, 2 * n); break;
    case LemmaPart::ii: lhs = moment_trig_power(2 * m, Trig::cos, 2 * n - 1); break;
    case LemmaPart::iii: lhs = moment_trig_power(2 * m - 1, Trig::cos, 2 * n); break;
    case LemmaPart::iv: lhs = moment_trig_power(2 * m - 1, Trig::sin, 2 * n - 1); break;
  }
  return {lhs, lemma22_rhs(part, m, n, tables)};
}

}  // namespace apery
