#include "apery/harmonic_tables.hpp"

#include <string>

#include "apery/errors.hpp"

namespace apery {

HarmonicTables::HarmonicTables(long n_max, int j_max, int m_max)
    : n_max_(n_max), j_max_(j_max), m_max_(m_max) {
  const std::size_t N = static_cast<std::size_t>(n_max_) + 1;

  ratio_.resize(N);
  ratio_[0] = 1;
  for (long n = 1; n <= n_max_; ++n)
    ratio_[n] = ratio_[n - 1] * rational(2 * n - 1, 2 * n);

  auto depth_table = [&](auto weight, bool empty_is_one) {
    // col 0: empty depth (1 everywhere) or a caller-supplied seed.
    std::vector<std::vector<Rational>> cols(j_max_ + 1,
                                            std::vector<Rational>(N));
    for (long n = 0; n <= n_max_; ++n) cols[0][n] = empty_is_one ? 1 : 0;
    for (int j = 1; j <= j_max_; ++j) {
      cols[j][0] = 0;
      for (long n = 1; n <= n_max_; ++n)
        cols[j][n] = cols[j][n - 1] + weight(n) * cols[j - 1][n];
    }
    return cols;
  };

  zeta_star_ = depth_table([](long n) { return rational(1, n * n); }, true);
  t_star_ = depth_table(
      [](long n) { return rational(1, (2 * n - 1) * (2 * n - 1)); }, true);

  // nested_S: depth-0 column is the reciprocal central ratio 4^n / C(2n,n).
  s_.assign(j_max_ + 1, std::vector<Rational>(N));
  for (long n = 0; n <= n_max_; ++n) s_[0][n] = 1 / ratio_[n];
  for (int j = 1; j <= j_max_; ++j) {
    s_[j][0] = 0;
    for (long n = 1; n <= n_max_; ++n)
      s_[j][n] = s_[j][n - 1] + rational(1, n * n) * s_[j - 1][n];
  }

  // nested_T: T_1(n) = sum_{q=0}^{n-1} C(2q,q) / ((2q+1) 4^q); deeper
  // columns stack the odd-square weights.
  t_.assign(j_max_ + 1, std::vector<Rational>(N));
  t_[1][0] = 0;
  for (long n = 1; n <= n_max_; ++n)
    t_[1][n] = t_[1][n - 1] + ratio_[n - 1] / (2 * n - 1);
  for (int j = 2; j <= j_max_; ++j) {
    t_[j][0] = 0;
    for (long n = 1; n <= n_max_; ++n)
      t_[j][n] =
          t_[j][n - 1] + rational(1, (2 * n - 1) * (2 * n - 1)) * t_[j - 1][n];
  }

  odd_.assign(m_max_ + 1, std::vector<Rational>(N));
  odd_alt_.assign(m_max_ + 1, std::vector<Rational>(N));
  for (int m = 1; m <= m_max_; ++m) {
    odd_[m][0] = 0;
    odd_alt_[m][0] = 0;
    for (long n = 1; n <= n_max_; ++n) {
      Rational w = 1 / Rational(int_pow(static_cast<unsigned long>(2 * n - 1),
                                        static_cast<unsigned long>(m)));
      odd_[m][n] = odd_[m][n - 1] + w;
      odd_alt_[m][n] = odd_alt_[m][n - 1] + (n % 2 == 1 ? w : -w);
    }
  }
}

void HarmonicTables::check(long n, int j, const char* table,
                           int j_limit) const {
  if (n < 0 || n > n_max_ || j < 0 || j > j_limit) {
    throw CapacityError(std::string(table) + ": index (n=" +
                        std::to_string(n) + ", " + std::to_string(j) +
                        ") outside table limits (n_max=" +
                        std::to_string(n_max_) + ", limit=" +
                        std::to_string(j_limit) + ")");
  }
}

const Rational& HarmonicTables::zeta_star(long n, int j) const {
  check(n, j, "zeta_star", j_max_);
  return zeta_star_[j][n];
}

const Rational& HarmonicTables::t_star(long n, int j) const {
  check(n, j, "t_star", j_max_);
  return t_star_[j][n];
}

const Rational& HarmonicTables::nested_S(long n, int j) const {
  check(n, j, "nested_S", j_max_);
  return s_[j][n];
}

const Rational& HarmonicTables::nested_T(long n, int j) const {
  check(n, j, "nested_T", j_max_);
  if (j < 1) throw CapacityError("nested_T requires depth j >= 1");
  return t_[j][n];
}

const Rational& HarmonicTables::odd_harmonic(long n, int m,
                                             bool alternating) const {
  check(n, m, "odd_harmonic", m_max_);
  if (m < 1) throw CapacityError("odd_harmonic requires order m >= 1");
  return alternating ? odd_alt_[m][n] : odd_[m][n];
}

const Rational& HarmonicTables::central_ratio(long n) const {
  check(n, 0, "central_ratio", 0);
  return ratio_[n];
}

// ---------------------------------------------------------------------------

FloatHarmonic::FloatHarmonic(const PrecisionContext& ctx, long horizon)
    : ctx_(ctx),
      bits_(ctx.bits()),
      horizon_(horizon),
      seeds_(std::min<long>(horizon, kExactSeedLimit), /*j_max=*/8,
             /*m_max=*/16) {}

void FloatHarmonic::build_ratio() {
  if (!ratio_.empty()) return;
  ratio_.reserve(horizon_ + 1);
  ratio_.push_back(Real::of(1L, bits_));
  for (long n = 1; n <= horizon_; ++n) {
    Real next = ratio_.back() * (2 * n - 1) / (2 * n);
    if (n <= seeds_.n_max()) next = Real::of(seeds_.central_ratio(n), bits_);
    ratio_.push_back(std::move(next));
  }
}

// kind: 0 = zeta_star, 1 = t_star, 2 = nested_S, 3 = nested_T,
//       4 = odd, 5 = odd alternating (j is the order m for those two).
const FloatHarmonic::Column& FloatHarmonic::column(std::vector<Column>& cols,
                                                   int j, int kind) {
  if (j < 0) throw CapacityError("harmonic float column: negative depth");
  if (static_cast<std::size_t>(j) < cols.size() && !cols[j].empty())
    return cols[j];
  if (static_cast<std::size_t>(j) >= cols.size()) cols.resize(j + 1);

  build_ratio();
  Column col;
  col.reserve(horizon_ + 1);
  const bool odd_weight = (kind == 1 || kind == 3);

  auto seed = [&](long n) -> Real {
    switch (kind) {
      case 0: return Real::of(seeds_.zeta_star(n, j), bits_);
      case 1: return Real::of(seeds_.t_star(n, j), bits_);
      case 2: return Real::of(seeds_.nested_S(n, j), bits_);
      case 3: return Real::of(seeds_.nested_T(n, j), bits_);
      case 4: return Real::of(seeds_.odd_harmonic(n, j, false), bits_);
      default: return Real::of(seeds_.odd_harmonic(n, j, true), bits_);
    }
  };

  const bool seedable = j <= seeds_.j_max();

  if (kind == 4 || kind == 5) {
    // Simple partial sums of 1/(2n-1)^m; the alternating variant is
    // accumulated in adjacent pairs so the running sum stays monotone.
    col.push_back(Real::of(0L, bits_));
    if (kind == 4) {
      for (long n = 1; n <= horizon_; ++n) {
        Real w = 1 / pow(Real::of(2 * n - 1, bits_),
                         static_cast<unsigned long>(j));
        col.push_back(col.back() + w);
      }
    } else {
      // Pairwise accumulation: even entries add the positive difference of
      // the adjacent pair, so rounding never sees cancellation.
      Real prev_w(bits_);
      for (long n = 1; n <= horizon_; ++n) {
        Real w = 1 / pow(Real::of(2 * n - 1, bits_),
                         static_cast<unsigned long>(j));
        if (n % 2 == 1) {
          col.push_back(col.back() + w);
          prev_w = w;
        } else {
          col.push_back(col[n - 2] + (prev_w - w));
        }
      }
    }
    cols[j] = std::move(col);
    return cols[j];
  }

  if (j == 0) {
    if (kind == 2) {
      for (long n = 0; n <= horizon_; ++n) col.push_back(1 / ratio_[n]);
    } else if (kind == 3) {
      throw CapacityError("nested_T float column requires depth j >= 1");
    } else {
      for (long n = 0; n <= horizon_; ++n) col.push_back(Real::of(1L, bits_));
    }
  } else if (kind == 3 && j == 1) {
    col.push_back(Real::of(0L, bits_));
    for (long n = 1; n <= horizon_; ++n) {
      Real next = col.back() + ratio_[n - 1] / (2 * n - 1);
      if (seedable && n <= seeds_.n_max()) next = seed(n);
      col.push_back(std::move(next));
    }
  } else {
    const Column& prev = column(cols, j - 1, kind);
    col.push_back(Real::of(0L, bits_));
    for (long n = 1; n <= horizon_; ++n) {
      Real w = odd_weight
                   ? 1 / Real::of((2 * n - 1) * (2 * n - 1), bits_)
                   : 1 / Real::of(n * n, bits_);
      Real next = col.back() + w * prev[n];
      if (seedable && n <= seeds_.n_max()) next = seed(n);
      col.push_back(std::move(next));
    }
  }
  cols[j] = std::move(col);
  return cols[j];
}

const Real& FloatHarmonic::zeta_star(long n, int j) {
  if (n < 0 || n > horizon_) throw CapacityError("zeta_star float: n outside horizon");
  return column(zeta_cols_, j, 0)[n];
}

const Real& FloatHarmonic::t_star(long n, int j) {
  if (n < 0 || n > horizon_) throw CapacityError("t_star float: n outside horizon");
  return column(tstar_cols_, j, 1)[n];
}

const Real& FloatHarmonic::nested_S(long n, int j) {
  if (n < 0 || n > horizon_) throw CapacityError("nested_S float: n outside horizon");
  return column(s_cols_, j, 2)[n];
}

const Real& FloatHarmonic::nested_T(long n, int j) {
  if (n < 0 || n > horizon_) throw CapacityError("nested_T float: n outside horizon");
  return column(t_cols_, j, 3)[n];
}

const Real& FloatHarmonic::odd_harmonic(long n, int m, bool alternating) {
  if (n < 0 || n > horizon_) throw CapacityError("odd_harmonic float: n outside horizon");
  if (m < 1) throw CapacityError("odd_harmonic requires order m >= 1");
  return column(alternating ? odd_alt_cols_ : odd_cols_, m,
                alternating ? 5 : 4)[n];
}

const Real& FloatHarmonic::central_ratio(long n) {
  if (n < 0 || n > horizon_) throw CapacityError("central_ratio float: n outside horizon");
  build_ratio();
  return ratio_[n];
}

Real harmonic_float(HarmonicKind kind, long n, int j_or_m,
                    const PrecisionContext& ctx) {
  FloatHarmonic fh(ctx, n);
  switch (kind) {
    case HarmonicKind::zeta_star: return fh.zeta_star(n, j_or_m);
    case HarmonicKind::t_star: return fh.t_star(n, j_or_m);
    case HarmonicKind::nested_S: return fh.nested_S(n, j_or_m);
    case HarmonicKind::nested_T: return fh.nested_T(n, j_or_m);
    case HarmonicKind::odd_h: return fh.odd_harmonic(n, j_or_m, false);
    case HarmonicKind::alt_odd_h: return fh.odd_harmonic(n, j_or_m, true);
    case HarmonicKind::central_ratio: return fh.central_ratio(n);
  }
  throw Error("unreachable harmonic kind");
}

}  // namespace apery
