#include "apery/constants.hpp"

#include <cmath>
#include <vector>

#include "apery/errors.hpp"

namespace apery {

std::string to_string(DirichletKind kind) {
  switch (kind) {
    case DirichletKind::zeta: return "zeta";
    case DirichletKind::eta: return "eta";
    case DirichletKind::lambda: return "lambda";
    case DirichletKind::beta: return "beta";
  }
  return "?";
}

Real alt_accel(const std::function<Real(long)>& term,
               const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.bits();
  // Relative error decays like (3 + sqrt 8)^-n = 5.828^-n; 1.31 decimal
  // digits per term, plus margin.
  const long n =
      static_cast<long>(std::ceil(1.31 * ctx.working_digits())) + 8;

  Real d = pow(Real::of(3L, p) + sqrt(Real::of(8L, p)),
               static_cast<unsigned long>(n));
  d = (d + 1 / d) / 2;
  Real b = Real::of(-1L, p);
  Real c = -d;
  Real s = Real::of(0L, p);

  int pattern = 0;  // sign expected at even k once a nonzero term was seen
  for (long k = 0; k < n; ++k) {
    c = b - c;
    Real t = term(k + 1);
    const int sg = t.sign();
    if (sg != 0) {
      const int even_sign = (k % 2 == 0) ? sg : -sg;
      if (pattern == 0) {
        pattern = even_sign;
      } else if (even_sign != pattern) {
        throw ContractError(
            "alt_accel: input terms do not alternate in sign");
      }
    }
    s += c * abs(t);
    // b_{k+1} = (k+n)(k-n) b_k / ((k+1/2)(k+1))
    b = b * (k + n) * (k - n) / (2 * k + 1) / (k + 1) * 2;
  }
  Real out = s / d;
  if (pattern < 0) out = -out;
  return out;
}

Real dirichlet(DirichletKind kind, int s, const PrecisionContext& ctx) {
  auto& cache = ConstantCache::instance();
  switch (kind) {
    case DirichletKind::eta: {
      if (s < 0) throw DomainViolation("eta(s) requires s >= 0");
      if (s == 0) return Real::of(1L, ctx.bits()) / 2;
      if (s == 1) return Real::ln2(ctx.bits());
      return cache.get_or_compute(
          "eta", s, ctx, [s](const PrecisionContext& c) {
            const mpfr_prec_t p = c.bits();
            return alt_accel(
                [s, p](long n) {
                  Real t = 1 / pow(Real::of(n, p),
                                   static_cast<unsigned long>(s));
                  return n % 2 == 1 ? t : -t;
                },
                c);
          });
    }
    case DirichletKind::zeta: {
      if (s < 2) throw DomainViolation("zeta(s) requires s >= 2");
      return cache.get_or_compute(
          "zeta", s, ctx, [s](const PrecisionContext& c) {
            Real eta_s = dirichlet(DirichletKind::eta, s, c);
            Real denom = 1 - ldexp(Real::of(1L, c.bits()), 1 - s);
            return eta_s / denom;
          });
    }
    case DirichletKind::lambda: {
      if (s < 2) throw DomainViolation("lambda(s) requires s >= 2");
      Real z = dirichlet(DirichletKind::zeta, s, ctx);
      return z * (1 - ldexp(Real::of(1L, ctx.bits()), -s));
    }
    case DirichletKind::beta: {
      if (s < 1) throw DomainViolation("beta(s) requires s >= 1");
      return cache.get_or_compute(
          "beta", s, ctx, [s](const PrecisionContext& c) {
            const mpfr_prec_t p = c.bits();
            return alt_accel(
                [s, p](long n) {
                  Real t = 1 / pow(Real::of(2 * n - 1, p),
                                   static_cast<unsigned long>(s));
                  return n % 2 == 1 ? t : -t;
                },
                c);
          });
    }
  }
  throw Error("unreachable dirichlet kind");
}

namespace {
std::mutex bernoulli_mu;
std::vector<Rational> bernoulli_table;  // grown on demand
}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(bernoulli_mu);
  if (bernoulli_table.empty()) bernoulli_table.push_back(Rational(1));
  while (bernoulli_table.size() <= n) {
    const unsigned m = bernoulli_table.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j)
      acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
    bernoulli_table.push_back(-acc / Rational(m + 1));
  }
  return bernoulli_table[n];
}

Rational zeta_nonpositive(unsigned n) {
  Rational b = bernoulli(n + 1) / Rational(n + 1);
  return n % 2 == 0 ? b : -b;
}

ConstantCache& ConstantCache::instance() {
  static ConstantCache cache;
  return cache;
}

Real ConstantCache::get_or_compute(
    const std::string& kind, int s, const PrecisionContext& ctx,
    const std::function<Real(const PrecisionContext&)>& compute) {
  const auto memo_key = std::make_tuple(kind, s, ctx.working_digits());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(memo_key);
    if (it != memo_.end()) return it->second;
    auto pit = persistent_.find({kind, s});
    if (pit != persistent_.end() && pit->second.digits >= ctx.digits) {
      // The hex rendering is exact, so parsing at the caller's working
      // precision is a single correct rounding of the stored value.
      Real rounded = Real::parse(pit->second.hex, ctx.bits());
      memo_.emplace(memo_key, rounded);
      return rounded;
    }
  }
  Real value = compute(ctx);  // outside the lock: compute() may recurse
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.emplace(memo_key, value);
  auto& slot = persistent_[{kind, s}];
  if (slot.digits < ctx.digits) {
    slot.digits = ctx.digits;
    slot.hex = it->second.hex_str();
  }
  return it->second;
}

void ConstantCache::preload(const std::string& kind, int s,
                            const PersistentEntry& entry) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = persistent_[{kind, s}];
  if (slot.digits < entry.digits) slot = entry;
}

std::map<std::pair<std::string, int>, ConstantCache::PersistentEntry>
ConstantCache::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return persistent_;
}

void ConstantCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.clear();
  persistent_.clear();
}

}  // namespace apery
