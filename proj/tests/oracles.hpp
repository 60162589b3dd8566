#pragma once

// Brute-force oracles: direct enumeration over all index chains, kept
// deliberately independent of the DP recurrences they validate. Only usable
// for small n and depth.

#include <apery/rational.hpp>

namespace apery::oracle {

inline Rational zeta_star_chains(long n, int j) {
  if (j == 0) return Rational(1);
  Rational acc(0);
  for (long n1 = 1; n1 <= n; ++n1)
    acc += rational(1, n1 * n1) * zeta_star_chains(n1, j - 1);
  return acc;
}

inline Rational t_star_chains(long n, int j) {
  if (j == 0) return Rational(1);
  Rational acc(0);
  for (long n1 = 1; n1 <= n; ++n1)
    acc += rational(1, (2 * n1 - 1) * (2 * n1 - 1)) *
           t_star_chains(n1, j - 1);
  return acc;
}

inline Rational nested_S_chains(long n, int j) {
  if (j == 0)
    return Rational(int_pow(4, static_cast<unsigned long>(n))) /
           Rational(binomial(2 * n, n));
  Rational acc(0);
  for (long n1 = 1; n1 <= n; ++n1)
    acc += rational(1, n1 * n1) * nested_S_chains(n1, j - 1);
  return acc;
}

inline Rational nested_T_chains(long n, int j) {
  if (j == 1) {
    Rational acc(0);
    for (long q = 0; q < n; ++q)
      acc += Rational(binomial(2 * q, q)) /
             (Rational(2 * q + 1) *
              Rational(int_pow(4, static_cast<unsigned long>(q))));
    return acc;
  }
  Rational acc(0);
  for (long n1 = 1; n1 <= n; ++n1)
    acc += rational(1, (2 * n1 - 1) * (2 * n1 - 1)) *
           nested_T_chains(n1, j - 1);
  return acc;
}

inline Rational odd_harmonic_direct(long n, int m, bool alternating) {
  Rational acc(0);
  for (long k = 1; k <= n; ++k) {
    Rational w = 1 / Rational(int_pow(static_cast<unsigned long>(2 * k - 1),
                                      static_cast<unsigned long>(m)));
    acc += (alternating && k % 2 == 0) ? -w : w;
  }
  return acc;
}

}  // namespace apery::oracle
