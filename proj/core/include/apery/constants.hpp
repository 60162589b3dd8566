#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>

#include "apery/precision.hpp"
#include "apery/rational.hpp"

namespace apery {

enum class DirichletKind { zeta, eta, lambda, beta };

std::string to_string(DirichletKind kind);

// Cohen–Rodriguez Villegas–Zagier acceleration for alternating series.
// `term(n)` must return the signed n-th term for n = 1, 2, ... and is called
// with strictly ascending n (stateful generators welcome). Signs of nonzero
// terms must alternate; otherwise a ContractError is thrown. Returns the
// series sum with relative error well below 10^-ctx.digits for totally
// monotone |term| sequences (every use in this library is one).
Real alt_accel(const std::function<Real(long)>& term,
               const PrecisionContext& ctx);

// Dirichlet constants. eta(0) = 1/2, eta(1) = ln 2; eta and beta by
// alternating acceleration; zeta(s) = eta(s) / (1 - 2^{1-s});
// lambda(s) = (1 - 2^-s) zeta(s). Domains: zeta/lambda s >= 2, eta s >= 0,
// beta s >= 1.
Real dirichlet(DirichletKind kind, int s, const PrecisionContext& ctx);

// Exact Bernoulli numbers, B_1 = -1/2 convention. Cached, thread-safe.
Rational bernoulli(unsigned n);

// zeta(-n) for n >= 0 as an exact rational: (-1)^n B_{n+1} / (n+1).
Rational zeta_nonpositive(unsigned n);

// Process-wide cache of computed constants.
//
// In-memory entries are keyed by (kind, s, digits) exactly, so repeated runs
// of the same configuration reproduce bit-identical values regardless of
// evaluation order. A persistent layer (loaded from the CLI cache file)
// serves any request at or below its stored digit count; lower-precision
// persistent entries are recomputed and replaced, never zero-padded.
class ConstantCache {
 public:
  static ConstantCache& instance();

  Real get_or_compute(
      const std::string& kind, int s, const PrecisionContext& ctx,
      const std::function<Real(const PrecisionContext&)>& compute);

  struct PersistentEntry {
    int digits = 0;
    std::string hex;  // exact binary round-trip rendering
  };

  // Persistence hooks (used by the report/cache file layer).
  void preload(const std::string& kind, int s, const PersistentEntry& entry);
  std::map<std::pair<std::string, int>, PersistentEntry> snapshot() const;
  void clear();  // test hook

 private:
  ConstantCache() = default;

  mutable std::mutex mu_;
  std::map<std::tuple<std::string, int, int>, Real> memo_;
  std::map<std::pair<std::string, int>, PersistentEntry> persistent_;
};

}  // namespace apery
