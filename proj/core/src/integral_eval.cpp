#include "apery/integral_eval.hpp"

#include <cmath>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/special_functions.hpp"

namespace apery {

namespace detail {

Real log_kernel_half(const Real& t, const Real& one_minus_t) {
  // (1+t)/(2 sqrt t) = 1 + (1 - sqrt t)^2/(2 sqrt t), and
  // 1 - sqrt t = (1-t)/(1 + sqrt t); exact near both endpoints.
  Real st = sqrt(t);
  Real num = one_minus_t / (1 + st);
  return log1p(num * num / ldexp(st, 1));
}

Real log_kernel_sq(const Real& t, const Real& one_minus_t) {
  // (1+t^2)/(2t) = 1 + (1-t)^2/(2t)
  return log1p(one_minus_t * one_minus_t / ldexp(t, 1));
}

}  // namespace detail

IntegralValue rhs_integral(SeriesFamily family, int j, int k,
                           const PrecisionContext& ctx) {
  SeriesSpec spec{family, j, k};
  validate(spec);
  const mpfr_prec_t p = ctx.bits();

  // front coefficient and integrand per family
  Rational coef;
  Integrand f;
  switch (family) {
    case SeriesFamily::zeta_family:
      coef = -Rational(int_pow(2, k)) / Rational(factorial(k - 1));
      f = [j, k, &ctx](const Real& t, const Real& omt) {
        Real kern = k > 1 ? pow(detail::log_kernel_half(t, omt),
                                static_cast<unsigned long>(k - 1))
                          : Real::of(1L, t.prec());
        // Li_0(-t)/t = -1/(1+t)
        Real li = j == 0 ? -1 / (1 + t) : polylog_int(2 * j, -t, ctx) / t;
        return kern * li;
      };
      break;
    case SeriesFamily::t_family:
      coef = Rational(int_pow(2, k + 3)) / Rational(factorial(k - 1));
      f = [j, k, &ctx](const Real& t, const Real& omt) {
        Real kern = k > 1 ? pow(detail::log_kernel_sq(t, omt),
                                static_cast<unsigned long>(k - 1))
                          : Real::of(1L, t.prec());
        return kern * ti(2 * j + 1, t, ctx) / (1 + t * t);
      };
      break;
    case SeriesFamily::nested_S_family:
      coef = Rational(int_pow(2, k + 1)) / Rational(factorial(k - 1));
      f = [j, k, &ctx](const Real& t, const Real& omt) {
        Real kern = k > 1 ? pow(detail::log_kernel_half(t, omt),
                                static_cast<unsigned long>(k - 1))
                          : Real::of(1L, t.prec());
        return kern * chi(2 * j, t, ctx) / t;
      };
      break;
    case SeriesFamily::nested_T_family:
      coef = Rational(int_pow(2, k + 3)) / Rational(factorial(k - 1));
      f = [j, k, &ctx](const Real& t, const Real& omt) {
        Real kern = k > 1 ? pow(detail::log_kernel_sq(t, omt),
                                static_cast<unsigned long>(k - 1))
                          : Real::of(1L, t.prec());
        return kern * chi(2 * j, t, ctx) / (1 + t * t);
      };
      break;
  }

  QuadratureResult q = de_quadrature(f, ctx);
  Real c = Real::of(coef, p);
  // Fold per-node evaluation error into the reported bound.
  Real node_noise = abs(q.value) * Real::pow10(-(ctx.working_digits() - 2), p);
  return {c * q.value, abs(c) * (q.error_bound + node_noise)};
}

Real coeff_c(long n, int k, const PrecisionContext& ctx) {
  if (n < 1 || k < 1) throw DomainViolation("coeff_c: requires n, k >= 1");
  if (k == 1) return 1 / Real::of(n, ctx.bits());
  Integrand f = [n, k](const Real& t, const Real& omt) {
    Real kern = pow(detail::log_kernel_half(t, omt),
                    static_cast<unsigned long>(k - 1));
    return n == 1 ? kern
                  : kern * pow(t, static_cast<unsigned long>(n - 1));
  };
  return de_quadrature(f, ctx).value;
}

std::vector<Real> coeff_c_array(int k, long N, const PrecisionContext& ctx) {
  if (k < 1 || N < 1) throw DomainViolation("coeff_c_array: requires k, N >= 1");
  std::vector<Real> out;
  out.reserve(N + 1);

  if (k == 1) {
    const mpfr_prec_t p = ctx.bits();
    out.push_back(Real(p));  // index 0 unused
    for (long n = 1; n <= N; ++n) out.push_back(1 / Real::of(n, p));
    return out;
  }

  if (k > 3) {
    // generic fallback: one quadrature per coefficient
    out.push_back(Real(ctx.bits()));
    for (long n = 1; n <= N; ++n) out.push_back(coeff_c(n, k, ctx));
    return out;
  }

  // The forward recurrences alternate in sign, so absolute errors stay
  // bounded; values decay like 1/n, costing ~3 log10 N digits. Widen the
  // guard accordingly.
  PrecisionContext inner{ctx.digits,
                         ctx.guard + static_cast<int>(
                             std::ceil(3.0 * std::log10(double(N)))) + 5};
  const mpfr_prec_t p = inner.bits();
  const Real ln2 = Real::ln2(p);

  // B_n = int_0^1 t^n/(1+t) dt:        B_0 = ln 2,      B_n = 1/n - B_{n-1}
  // U_n = int_0^1 t^n ln(1+t)/(1+t):   U_0 = ln^2(2)/2, U_n = P_n - U_{n-1}
  // V_n = int_0^1 t^n ln t/(1+t):      V_0 = -pi^2/12,  V_n = -1/n^2 - V_{n-1}
  // P_n = int_0^1 t^{n-1} ln(1+t) = (ln 2 - B_n)/n
  Real B = ln2;
  Real U = ln2 * ln2 / 2;
  Real V = -dirichlet(DirichletKind::eta, 2, inner);

  out.push_back(Real(p));  // index 0 unused
  for (long n = 1; n <= N; ++n) {
    B = 1 / Real::of(n, p) - B;
    Real P = (ln2 - B) / n;
    if (k == 2) {
      // c_n(2) = -B_n/n + 1/(2n^2)
      Real c = -B / n + 1 / Real::of(2 * n * n, p);
      out.push_back(std::move(c));
      continue;
    }
    U = P - U;
    V = -1 / Real::of(n * n, p) - V;
    // Q_n = int t^{n-1} ln^2(1+t) = ln^2(2)/n - (2/n) U_n
    Real Q = (ln2 * ln2 - ldexp(U, 1)) / n;
    // R_n = int t^{n-1} ln(1+t) ln t = -ln2/n^2 - V_n/n + B_n/n^2
    Real n2 = Real::of(n * n, p);
    Real R = -ln2 / n2 - V / n + B / n2;
    // c_n(3) = Q + ln^2(2)/n + 1/(2n^3) - 2 ln2 P - R - ln2/n^2
    Real c = Q + ln2 * ln2 / n + 1 / Real::of(2 * n * n * n, p) -
             ldexp(ln2 * P, 1) - R - ln2 / n2;
    out.push_back(std::move(c));
  }
  return out;
}

Real lemma23_tail_bound(int k, long N, const PrecisionContext& ctx) {
  if (k < 2) throw DomainViolation("lemma23_tail_bound: requires k >= 2");
  const mpfr_prec_t p = ctx.bits();
  // c_n(k) <= C_k n^-(2k-1), C_k = (2k-2)! 2^{3-3k};
  // sum_{n>N} n^-(2k-1) <= N^-(2k-2)/(2k-2).
  Rational c_k = Rational(factorial(2 * k - 2)) /
                 Rational(int_pow(2, 3 * k - 3));
  Rational front = Rational(int_pow(2, k + 1)) / Rational(factorial(k - 1));
  Rational tail_coeff = front * c_k / Rational(2 * k - 2);
  return Real::of(tail_coeff, p) /
         pow(Real::of(N, p), static_cast<unsigned long>(2 * k - 2));
}

Real lemma23_partial(Lemma23Variant variant, int k, const Real& x, long N,
                     const PrecisionContext& ctx) {
  if (k < 1) throw DomainViolation("lemma23_partial: requires k >= 1");
  if (N < 1) throw DomainViolation("lemma23_partial: requires N >= 1");
  const mpfr_prec_t p = ctx.bits();

  std::vector<Real> c = coeff_c_array(k, N, ctx);

  // cos(2nx) by angle addition
  Real c1(p), s1(p);
  Real two_x = ldexp(x, 1);
  mpfr_sin_cos(s1.raw(), c1.raw(), two_x.raw(), MPFR_RNDN);
  Real cn = c1, sn = s1;

  Real sum = Real::of(0L, p);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) {
      Real cnext = cn * c1 - sn * s1;
      Real snext = sn * c1 + cn * s1;
      cn = std::move(cnext);
      sn = std::move(snext);
    }
    const long sign = n % 2 == 1 ? 1 : -1;
    if (variant == Lemma23Variant::i) {
      sum += c[n] * (cn + sign);
    } else {
      sum += c[n] * ((1 - cn) * sign);
    }
  }
  Rational front = Rational(int_pow(2, k)) / Rational(factorial(k - 1));
  return Real::of(front, p) * sum;
}

Real gf_partial(GenFunc kind, int j, const Real& t, long N,
                const PrecisionContext& ctx) {
  if (kind == GenFunc::eq36 && j < 0)
    throw DomainViolation("gf_partial eq36: requires j >= 0");
  if (kind == GenFunc::eq310 && j < 1)
    throw DomainViolation("gf_partial eq310: requires j >= 1");
  if (abs(t) >= 1) throw DomainViolation("gf_partial: requires |t| < 1");

  const mpfr_prec_t p = ctx.bits();
  const int order = kind == GenFunc::eq36 ? 2 * j + 1 : 2 * j;
  FloatHarmonic fh(ctx, N);

  Real t2 = t * t;
  Real tp = t;  // t^{2n-1}
  Real sum = Real::of(0L, p);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) tp *= t2;
    const Real& h =
        fh.odd_harmonic(n, order, /*alternating=*/kind == GenFunc::eq310);
    Real term = h * tp;
    sum += n % 2 == 1 ? term : -term;
  }
  return sum;
}

Real gf_kernel(GenFunc kind, int j, const Real& t, const PrecisionContext& ctx) {
  Real denom = 1 + t * t;
  if (kind == GenFunc::eq36) return ti(2 * j + 1, t, ctx) / denom;
  return chi(2 * j, t, ctx) / denom;
}

}  // namespace apery
