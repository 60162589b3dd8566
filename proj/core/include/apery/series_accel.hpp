#pragma once

#include <string>
#include <vector>

#include "apery/harmonic_tables.hpp"
#include "apery/precision.hpp"

namespace apery {

// The four series families on the left-hand sides:
//   zeta_family:     sum C(2n,n)/(n^k 4^n) zeta*_n({2}_j)
//   t_family:        sum 4^n/(n^{k+1} C(2n,n)) t*_n({2}_j)
//   nested_S_family: sum C(2n,n)/(n^k 4^n) S_j(n)
//   nested_T_family: sum 4^n/(n^{k+1} C(2n,n)) T_j(n)
enum class SeriesFamily { zeta_family, t_family, nested_S_family, nested_T_family };

std::string to_string(SeriesFamily family);

struct SeriesSpec {
  SeriesFamily family;
  int j = 0;
  int k = 1;
};

// Throws DomainViolation naming the violated constraint. The nested families
// require depth j >= 1 (the j = 0 chains degenerate); all families need
// k >= 1 and j >= 0.
void validate(const SeriesSpec& spec);

// Tail model for partial sums: s_inf - s_N ~ sum_i d_i N^-(alpha - 1 + i*step)
// with leading term exponent alpha = k + 1/2. The central ratio expansion
// contributes integer powers of 1/n; the nested families' seed sums
// (4^n/C(2n,n) resp. the arcsin-type column) carry sqrt(n) factors whose
// tails descend in half-integer steps, so `step` is 1/2 there and 1 for the
// zeta/t families.
struct TailModel {
  double alpha;
  double step;
  int depth = 8;
  long horizon = 10000;

  static TailModel for_spec(const SeriesSpec& spec, long horizon = 10000,
                            int depth = 8);
};

struct SeriesSettings {
  // 0 = per-family default: 10^4 terms, depth 8 for the integer-step
  // families; 4*10^4 terms, depth 9 for the half-step nested families,
  // which need more runway before the ladder asymptotics land (validated
  // against the closed-form instances).
  long horizon = 0;
  int ladder_depth = 0;
  // accuracy the extrapolated value must certify (relative digits)
  int digits_target = 10;
};

struct AcceleratedValue {
  Real value;
  Real error_bound;  // reported bound, validated to contain the true error
};

// Partial sum of the first N terms from the floating tables.
Real series_partial(const SeriesSpec& spec, long N, const PrecisionContext& ctx);

// Term a_n of the family (mostly a test hook).
Real series_term(const SeriesSpec& spec, long n, const PrecisionContext& ctx);

// Partial sum to the horizon plus Richardson extrapolation on the exponent
// ladder of the tail model. Throws AccuracyError with the best value and
// bound when the ladder stagnates above the requested target.
AcceleratedValue series_accelerated(const SeriesSpec& spec,
                                    const PrecisionContext& ctx,
                                    const SeriesSettings& settings = {});

}  // namespace apery
