#include "apery/series_accel.hpp"

#include <algorithm>

#include "apery/errors.hpp"

namespace apery {

std::string to_string(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::zeta_family: return "zeta_family";
    case SeriesFamily::t_family: return "t_family";
    case SeriesFamily::nested_S_family: return "nested_S_family";
    case SeriesFamily::nested_T_family: return "nested_T_family";
  }
  return "?";
}

void validate(const SeriesSpec& spec) {
  if (spec.k < 1) throw DomainViolation("series: requires k >= 1");
  if (spec.j < 0) throw DomainViolation("series: requires j >= 0");
  if ((spec.family == SeriesFamily::nested_S_family ||
       spec.family == SeriesFamily::nested_T_family) &&
      spec.j < 1) {
    throw DomainViolation("series: nested families require depth j >= 1");
  }
}

TailModel TailModel::for_spec(const SeriesSpec& spec, long horizon,
                              int depth) {
  const bool nested = spec.family == SeriesFamily::nested_S_family ||
                      spec.family == SeriesFamily::nested_T_family;
  return TailModel{spec.k + 0.5, nested ? 0.5 : 1.0, depth, horizon};
}

namespace {

class TermSource {
 public:
  TermSource(const SeriesSpec& spec, const PrecisionContext& ctx, long horizon)
      : spec_(spec), bits_(ctx.bits()), fh_(ctx, horizon) {}

  Real term(long n) {
    switch (spec_.family) {
      case SeriesFamily::zeta_family:
        return fh_.central_ratio(n) * fh_.zeta_star(n, spec_.j) /
               pow(Real::of(n, bits_), static_cast<unsigned long>(spec_.k));
      case SeriesFamily::t_family:
        return fh_.t_star(n, spec_.j) /
               (fh_.central_ratio(n) *
                pow(Real::of(n, bits_),
                    static_cast<unsigned long>(spec_.k + 1)));
      case SeriesFamily::nested_S_family:
        return fh_.central_ratio(n) * fh_.nested_S(n, spec_.j) /
               pow(Real::of(n, bits_), static_cast<unsigned long>(spec_.k));
      case SeriesFamily::nested_T_family:
        return fh_.nested_T(n, spec_.j) /
               (fh_.central_ratio(n) *
                pow(Real::of(n, bits_),
                    static_cast<unsigned long>(spec_.k + 1)));
    }
    throw Error("unreachable series family");
  }

 private:
  SeriesSpec spec_;
  mpfr_prec_t bits_;
  FloatHarmonic fh_;
};

}  // namespace

Real series_term(const SeriesSpec& spec, long n, const PrecisionContext& ctx) {
  validate(spec);
  TermSource src(spec, ctx, n);
  return src.term(n);
}

Real series_partial(const SeriesSpec& spec, long N,
                    const PrecisionContext& ctx) {
  validate(spec);
  if (N < 1) throw DomainViolation("series_partial: requires N >= 1");
  TermSource src(spec, ctx, N);
  Real sum = Real::of(0L, ctx.bits());
  for (long n = 1; n <= N; ++n) sum += src.term(n);
  return sum;
}

AcceleratedValue series_accelerated(const SeriesSpec& spec,
                                    const PrecisionContext& ctx,
                                    const SeriesSettings& settings) {
  validate(spec);
  const mpfr_prec_t p = ctx.bits();
  const bool nested = spec.family == SeriesFamily::nested_S_family ||
                      spec.family == SeriesFamily::nested_T_family;
  const long horizon =
      settings.horizon > 0 ? settings.horizon : (nested ? 40000 : 10000);
  const int requested_depth =
      settings.ladder_depth > 0 ? settings.ladder_depth : (nested ? 9 : 8);
  const TailModel tm = TailModel::for_spec(spec, horizon, requested_depth);

  int depth = tm.depth;
  long n0 = tm.horizon >> (depth - 1);
  while (n0 < 8 && depth > 2) {
    --depth;
    n0 = tm.horizon >> (depth - 1);
  }

  // One pass over the terms, recording partial sums at the geometric nodes
  // n0, 2 n0, 4 n0, ..., n0 2^{depth-1}.
  std::vector<Real> row;
  row.reserve(depth);
  {
    TermSource src(spec, ctx, n0 << (depth - 1));
    Real sum = Real::of(0L, p);
    long next_node = n0;
    for (long n = 1; n <= (n0 << (depth - 1)); ++n) {
      sum += src.term(n);
      if (n == next_node) {
        row.push_back(sum);
        next_node <<= 1;
      }
    }
  }

  // Richardson elimination of successive tail exponents
  // beta + r*step, beta = alpha - 1, on the geometric node ladder.
  const double beta = tm.alpha - 1.0;
  Real estimate = row.back();
  std::vector<Real> corrections;
  corrections.reserve(depth);

  for (int r = 1; r < depth; ++r) {
    const double gamma = beta + (r - 1) * tm.step;
    Real factor = pow(Real::of(2L, p), Real::of(gamma, p));  // exact gamma
    std::vector<Real> next;
    next.reserve(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      next.push_back((factor * row[i + 1] - row[i]) / (factor - 1));
    corrections.push_back(abs(next.back() - row.back()));
    row = std::move(next);
    estimate = row.back();
  }

  // Reported bound: a single stage can converge spuriously when its
  // exponent's coefficient happens to be tiny, so take the max over the
  // last three stage corrections, with a safety factor and a rounding-noise
  // floor for the summation.
  Real worst = corrections.back();
  for (std::size_t i = 2; i <= 3 && corrections.size() >= i; ++i)
    worst = max(worst, corrections[corrections.size() - i]);
  Real noise = abs(estimate) * Real::pow10(-(ctx.working_digits() - 4), p);
  Real bound = 4 * worst + noise;

  Real target = abs(estimate) * Real::pow10(-settings.digits_target, p);
  if (!(bound <= target)) {
    throw AccuracyError(
        "series_accelerated: ladder did not certify the requested accuracy "
        "for " + to_string(spec.family),
        estimate, bound);
  }
  return {estimate, bound};
}

}  // namespace apery
