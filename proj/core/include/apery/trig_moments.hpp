#pragma once

#include <map>

#include "apery/harmonic_tables.hpp"
#include "apery/qpi_poly.hpp"

namespace apery {

enum class Trig { cos, sin };

// Exact integral over [0, pi/2] of x^p * cos(a x) or x^p * sin(a x).
// a = 0 means the pure power integral for cos and zero for sin. Closed under
// QPiPoly because sin(a pi/2), cos(a pi/2) lie in {-1, 0, 1}.
QPiPoly moment_multi_angle(unsigned p, Trig trig, unsigned a);

// Finite multiple-angle expansion of cos^q or sin^q with rational
// coefficients: sum of coeff * basisfn(freq * x). The basis is cosine for
// cos^q and for even sine powers (including a freq-0 constant), sine for odd
// sine powers. Coefficients come from the binomial expansion of
// ((e^{ix} +- e^{-ix}) / 2)^q.
struct TrigExpansion {
  Trig basis;
  std::map<unsigned, Rational> terms;  // freq -> coeff, no zero coeffs
};

TrigExpansion trig_power_expand(Trig trig, unsigned q);

// Exact integral over [0, pi/2] of x^p * trig^q(x).
QPiPoly moment_trig_power(unsigned p, Trig trig, unsigned q);

enum class LemmaPart { i, ii, iii, iv };

struct LemmaSides {
  QPiPoly lhs;
  QPiPoly rhs;
};

// Both sides of the power/multiple-angle moment identities. The left side is
// assembled from moment_multi_angle (for parts iii/iv via the finite
// odd-frequency expansions of the kernels), the right side from the stated
// closed formulas with odd harmonic numbers pulled from `tables`.
//
// Domains: i: m >= 0, n >= 1; ii: m >= 1, n >= 1; iii: m >= 0, n >= 0;
// iv: m >= 1, n >= 0.
LemmaSides lemma21_sides(LemmaPart part, long m, long n,
                         const HarmonicTables& tables);

// Both sides of the power/trig-power moment identities. Left side via
// moment_trig_power, right side from the closed formulas with zeta*, t*, and
// the two nested binomial-weighted sums.
//
// Domains: i, ii: m >= 0, n >= 1; iii, iv: m >= 1, n >= 1.
LemmaSides lemma22_sides(LemmaPart part, long m, long n,
                         const HarmonicTables& tables);

}  // namespace apery
