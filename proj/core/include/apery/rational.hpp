#pragma once

#include <gmpxx.h>

#include <string>

namespace apery {

// Exact big-integer fraction. mpq_class keeps the canonical form we rely on:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1. The rational() factory
// below canonicalizes explicitly, which raw mpq_class construction does not.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt int_pow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline Rational rat_pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
  return r;  // q canonical => q^e canonical
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace apery
