#include "apery/quadrature.hpp"

#include <cmath>
#include <vector>

namespace apery {

namespace {

// One tanh-sinh node pair at parameter tau > 0:
//   z = (pi/2) sinh(tau),  t(tau) = 1/(1 + e^{-2z}),  1 - t(tau) = t(-tau)
//   weight = pi cosh(tau) t (1 - t)
// The pair contribution is w * (f(t, 1-t) + f(1-t, t)).
struct NodeEval {
  Real weight;
  Real t;
  Real omt;
};

NodeEval eval_node(const Real& tau, const Real& half_pi) {
  const mpfr_prec_t p = tau.prec();
  Real sh(p), ch(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), tau.raw(), MPFR_RNDN);
  Real e = exp(-ldexp(half_pi * sh, 1));  // e^{-2z}, in (0, 1]
  Real denom = 1 + e;
  NodeEval out{Real(p), Real(p), Real(p)};
  out.t = 1 / denom;
  out.omt = e / denom;
  out.weight = ldexp(half_pi, 1) * ch * out.t * out.omt;
  return out;
}

}  // namespace

QuadratureResult de_quadrature(const Integrand& f, const PrecisionContext& ctx,
                               const QuadratureOptions& opt) {
  const mpfr_prec_t p = ctx.bits();
  const int wd = ctx.working_digits();

  // Node cutoff: weights decay like exp(-pi sinh(tau)); past tau_max they
  // are below the working noise floor for any log-power integrand.
  const double tau_max = std::asinh((wd + 12) * 2.302585092994046 /
                                    3.141592653589793);

  const Real half_pi = ldexp(Real::pi(p), -1);
  const Real tol = Real::pow10(-(ctx.digits + opt.extra_agreement), p);
  const Real floor_tol = Real::pow10(-(wd + 8), p);

  Real h = Real::of(1L, p);
  // Level 0: tau = 0, +-1, +-2, ...  Center node: t = 1/2, weight pi/4.
  Real half = ldexp(Real::of(1L, p), -1);
  Real acc = ldexp(half_pi, -1) * f(half, half);
  {
    long k = 1;
    while (static_cast<double>(k) <= tau_max) {
      Real tau = Real::of(k, p);
      NodeEval nd = eval_node(tau, half_pi);
      acc += nd.weight * (f(nd.t, nd.omt) + f(nd.omt, nd.t));
      ++k;
    }
  }
  Real integral = acc;  // h = 1

  Real prev(p);
  for (int level = 1; level <= opt.max_level; ++level) {
    h = ldexp(Real::of(1L, p), -level);
    // new nodes: odd multiples of h
    Real new_sum = Real::of(0L, p);
    const long k_max = static_cast<long>(std::ceil(tau_max / std::ldexp(1.0, -level)));
    for (long k = 1; k <= k_max; k += 2) {
      Real tau = h * k;
      NodeEval nd = eval_node(tau, half_pi);
      new_sum += nd.weight * (f(nd.t, nd.omt) + f(nd.omt, nd.t));
    }
    prev = integral;
    integral = ldexp(prev, -1) + h * new_sum;

    if (level >= 3) {
      Real diff = abs(integral - prev);
      if (diff <= abs(integral) * tol + floor_tol) {
        return {integral, diff, level};
      }
    }
  }
  Real diff = abs(integral - prev);
  throw AccuracyError(
      "de_quadrature: level cap reached before successive levels agreed",
      integral, diff);
}

QuadratureResult de_quadrature_upto(const Real& b, const Integrand& f,
                                    const PrecisionContext& ctx,
                                    const QuadratureOptions& opt) {
  if (b == 1) return de_quadrature(f, ctx, opt);
  // int_0^b f = b * int_0^1 f(b u) du; the scaled offset 1 - b u is computed
  // directly, which is safe because b < 1 keeps it away from 0.
  Integrand g = [&](const Real& u, const Real& omu) {
    Real t = b * u;
    Real omt = 1 - t;
    (void)omu;
    return f(t, omt);
  };
  QuadratureResult r = de_quadrature(g, ctx, opt);
  r.value *= b;
  r.error_bound *= abs(b);
  return r;
}

}  // namespace apery
