#pragma once

#include <vector>

#include "apery/precision.hpp"
#include "apery/rational.hpp"

namespace apery {

// Exact values of all finite nested sums used by the identities:
//
//   zeta_star(n, j)   sum over n >= n1 >= ... >= nj >= 1 of prod 1/ni^2
//   t_star(n, j)      same chains with weights 1/(2*ni - 1)^2
//   nested_S(n, j)    chains weighted by 4^nj / C(2nj, nj) at the tail,
//                     nested_S(n, 0) = 4^n / C(2n, n)
//   nested_T(n, j)    chains n >= n1 >= ... >= n_{j-1} > nj >= 0 with tail
//                     weight C(2nj, nj) / ((2nj+1) 4^nj); for j = 1 the sum
//                     runs over n > n1 >= 0
//   odd_harmonic      O_n^(m) and its alternating variant
//   central_ratio(n)  C(2n, n) / 4^n
//
// Tables are built once in the constructor (column-by-column one-step
// recurrences) and immutable afterwards; concurrent reads are safe.
class HarmonicTables {
 public:
  HarmonicTables(long n_max = 64, int j_max = 8, int m_max = 16);

  long n_max() const { return n_max_; }
  int j_max() const { return j_max_; }
  int m_max() const { return m_max_; }

  const Rational& zeta_star(long n, int j) const;
  const Rational& t_star(long n, int j) const;
  const Rational& nested_S(long n, int j) const;
  const Rational& nested_T(long n, int j) const;  // j >= 1
  const Rational& odd_harmonic(long n, int m, bool alternating) const;
  const Rational& central_ratio(long n) const;

 private:
  void check(long n, int j, const char* table, int j_limit) const;

  long n_max_;
  int j_max_;
  int m_max_;
  // [j][n] resp. [m][n]
  std::vector<std::vector<Rational>> zeta_star_, t_star_, s_, t_;
  std::vector<std::vector<Rational>> odd_, odd_alt_;
  std::vector<Rational> ratio_;
};

// Floating mirror of the exact tables for large n (the series evaluation
// path). Columns are built lazily at ctx working precision; entries for
// n <= seed_limit are embedded from an exact table so the float recurrences
// continue from exact seeds.
class FloatHarmonic {
 public:
  static constexpr long kExactSeedLimit = 64;

  FloatHarmonic(const PrecisionContext& ctx, long horizon = 10000);

  long horizon() const { return horizon_; }

  const Real& zeta_star(long n, int j);
  const Real& t_star(long n, int j);
  const Real& nested_S(long n, int j);
  const Real& nested_T(long n, int j);
  const Real& odd_harmonic(long n, int m, bool alternating);
  const Real& central_ratio(long n);

 private:
  using Column = std::vector<Real>;

  const Column& column(std::vector<Column>& cols, int j, int kind);
  void build_ratio();

  PrecisionContext ctx_;
  mpfr_prec_t bits_;
  long horizon_;
  HarmonicTables seeds_;
  std::vector<Column> zeta_cols_, tstar_cols_, s_cols_, t_cols_;
  std::vector<Column> odd_cols_, odd_alt_cols_;
  Column ratio_;
};

enum class HarmonicKind { zeta_star, t_star, nested_S, nested_T, odd_h, alt_odd_h, central_ratio };

// Thin functional facade: one-off float evaluation of a single table entry.
Real harmonic_float(HarmonicKind kind, long n, int j_or_m, const PrecisionContext& ctx);

}  // namespace apery
