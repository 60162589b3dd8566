#pragma once

#include <vector>

#include "apery/precision.hpp"
#include "apery/quadrature.hpp"
#include "apery/series_accel.hpp"

namespace apery {

struct IntegralValue {
  Real value;
  Real error_bound;
};

// Right-hand side integral of the series family's theorem, evaluated by
// double-exponential quadrature:
//   zeta_family:     -2^k/(k-1)! int_0^1 ln^{k-1}((1+t)/(2 sqrt t)) Li_{2j}(-t)/t dt
//   t_family:         2^{k+3}/(k-1)! int_0^1 ln^{k-1}((1+t^2)/(2t)) Ti_{2j+1}(t)/(1+t^2) dt
//   nested_S_family:  2^{k+1}/(k-1)! int_0^1 ln^{k-1}((1+t)/(2 sqrt t)) chi_{2j}(t)/t dt
//   nested_T_family:  2^{k+3}/(k-1)! int_0^1 ln^{k-1}((1+t^2)/(2t)) chi_{2j}(t)/(1+t^2) dt
IntegralValue rhs_integral(SeriesFamily family, int j, int k,
                           const PrecisionContext& ctx);

// c_n(k) = int_0^1 t^{n-1} ln^{k-1}((1+t)/(2 sqrt t)) dt, one quadrature.
Real coeff_c(long n, int k, const PrecisionContext& ctx);

// c_1(k)..c_N(k) in one pass. For k <= 3 this runs the closed recurrences
// (B_n = 1/n - B_{n-1} and friends) with widened guard digits; for larger k
// it falls back to per-n quadrature.
std::vector<Real> coeff_c_array(int k, long N, const PrecisionContext& ctx);

// Rigorous tail bound for the expansion remainder:
//   2^{k+1}/(k-1)! * sum_{n>N} 2 c_n(k)  with  c_n(k) <= C_k n^-(2k-1),
// from ln cosh y <= y^2/2 under the paper's e^{-2ny} transform. Requires
// k >= 2 (the k = 1 series is only conditionally convergent).
Real lemma23_tail_bound(int k, long N, const PrecisionContext& ctx);

enum class Lemma23Variant { i, ii };

// Partial sum of the Fourier-coefficient expansion of Li_k(cos^2 x) (variant
// i) resp. Li_k(sin^2 x) (variant ii):
//   2^k/(k-1)! sum_{n<=N} c_n(k) ((-1)^{n-1} + cos 2nx)        (i)
//   2^k/(k-1)! sum_{n<=N} (-1)^{n-1} c_n(k) (1 - cos 2nx)      (ii)
Real lemma23_partial(Lemma23Variant variant, int k, const Real& x, long N,
                     const PrecisionContext& ctx);

enum class GenFunc { eq36, eq310 };

// Partial sums of the two generating functions:
//   eq36:  sum (-1)^{n-1} O_n^{(2j+1)} t^{2n-1}   -> Ti_{2j+1}(t)/(1+t^2)
//   eq310: sum (-1)^{n-1} Obar_n^{(2j)} t^{2n-1}  -> chi_{2j}(t)/(1+t^2)
Real gf_partial(GenFunc kind, int j, const Real& t, long N,
                const PrecisionContext& ctx);

// The closed kernel the partial sums converge to.
Real gf_kernel(GenFunc kind, int j, const Real& t, const PrecisionContext& ctx);

namespace detail {

// ln((1+t)/(2 sqrt t)) and ln((1+t^2)/(2t)) in cancellation-free form.
Real log_kernel_half(const Real& t, const Real& one_minus_t);
Real log_kernel_sq(const Real& t, const Real& one_minus_t);

}  // namespace detail

}  // namespace apery
