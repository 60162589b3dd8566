#pragma once

#include "apery/constants.hpp"
#include "apery/precision.hpp"

namespace apery {

// Polylogarithm Li_s(x) for integer order s >= 0 on [-1, 1].
// s = 0: x/(1-x); s = 1: -ln(1-x); both diverge at x = 1.
// s >= 2: direct power series for |x| <= 1/2, log-series expansion about
// x = 1 for x > 1/2, alternating acceleration for x < -1/2; endpoint values
// zeta(s) and -eta(s).
Real polylog_int(int s, const Real& x, const PrecisionContext& ctx);

// Legendre chi function chi_s(x) for integer s >= 1 on [-1, 1].
// chi_1 = arctanh (|x| < 1 only). For s >= 2: direct odd series for
// |x| <= 1/2; the odd/even split Li_s(x) - 2^-s Li_s(x^2) above; lambda(s)
// at x = 1.
Real chi(int s, const Real& x, const PrecisionContext& ctx);

// Inverse tangent integral Ti_m(x) for integer m >= 0 on [-1, 1].
// Ti_0(x) = x/(1+x^2), Ti_1 = arctan. For m >= 2: direct alternating series
// for |x| <= 1/2, acceleration above; beta(m) at x = 1.
Real ti(int m, const Real& x, const PrecisionContext& ctx);

namespace detail {

// The individual evaluation strategies, exposed so tests can check that the
// methods agree on overlapping domains.
Real polylog_direct_series(int s, const Real& x, const PrecisionContext& ctx);
Real polylog_near_one(int s, const Real& x, const PrecisionContext& ctx);
Real polylog_alternating(int s, const Real& x, const PrecisionContext& ctx);

}  // namespace detail

}  // namespace apery
