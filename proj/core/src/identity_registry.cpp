#include "apery/identity_registry.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <mutex>
#include <thread>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/integral_eval.hpp"
#include "apery/series_accel.hpp"
#include "apery/special_functions.hpp"
#include "apery/trig_moments.hpp"

namespace apery {

namespace {

const HarmonicTables& shared_tables() {
  static const HarmonicTables tables(64, 8, 16);
  return tables;
}

long param_long(const IdentityInstance& inst, const std::string& key) {
  auto it = inst.params.find(key);
  if (it == inst.params.end())
    throw DomainViolation(inst.id + ": missing parameter '" + key + "'");
  return std::stol(it->second);
}

// "pi/6" -> pi/6; plain rationals like "1/2" or "0.75" parse numerically.
Real param_point(const IdentityInstance& inst, const std::string& key,
                 const PrecisionContext& ctx) {
  auto it = inst.params.find(key);
  if (it == inst.params.end())
    throw DomainViolation(inst.id + ": missing parameter '" + key + "'");
  const std::string& tok = it->second;
  if (tok.rfind("pi/", 0) == 0) {
    long denom = std::stol(tok.substr(3));
    if (denom <= 0) throw DomainViolation(inst.id + ": bad angle " + tok);
    return Real::pi(ctx.bits()) / denom;
  }
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    long num = std::stol(tok.substr(0, slash));
    long den = std::stol(tok.substr(slash + 1));
    if (den <= 0) throw DomainViolation(inst.id + ": bad rational " + tok);
    return Real::of(rational(num, den), ctx.bits());
  }
  return Real::parse(tok, ctx.bits());
}

std::string err_str(const Real& e) { return e.str(3); }

std::string value_str(const Real& v, const PrecisionContext& ctx) {
  return v.str(ctx.digits);
}

LemmaPart parse_part(const std::string& id) {
  auto dot = id.rfind('.');
  std::string part = id.substr(dot + 1);
  if (part == "i") return LemmaPart::i;
  if (part == "ii") return LemmaPart::ii;
  if (part == "iii") return LemmaPart::iii;
  if (part == "iv") return LemmaPart::iv;
  throw DomainViolation("unknown lemma part in id: " + id);
}

ReportEntry check_exact_lemma(const IdentityInstance& inst,
                              const PrecisionContext& ctx) {
  const bool is21 = inst.id.rfind("L2.1", 0) == 0;
  LemmaPart part = parse_part(inst.id);
  long m = param_long(inst, "m");
  long n = param_long(inst, "n");

  LemmaSides sides = is21 ? lemma21_sides(part, m, n, shared_tables())
                          : lemma22_sides(part, m, n, shared_tables());

  ReportEntry entry;
  entry.lhs = sides.lhs.str();
  entry.rhs = sides.rhs.str();
  if (sides.lhs == sides.rhs) {
    entry.status = "PASS";
    entry.abs_err = "0";
    entry.rel_err = "0";
  } else {
    entry.status = "FAIL";
    QPiPoly diff = sides.lhs - sides.rhs;
    Real d = abs(diff.to_real(ctx));
    entry.abs_err = err_str(d);
    Real scale = max(abs(sides.lhs.to_real(ctx)), abs(sides.rhs.to_real(ctx)));
    entry.rel_err = scale.is_zero() ? entry.abs_err : err_str(d / scale);
  }
  return entry;
}

struct NumericSides {
  Real lhs, rhs;
  Real lhs_bound, rhs_bound;
};

ReportEntry finish_numeric(const IdentityInstance& inst,
                           const PrecisionContext& ctx,
                           const NumericSides& s) {
  ReportEntry entry;
  entry.lhs = value_str(s.lhs, ctx);
  entry.rhs = value_str(s.rhs, ctx);
  Real diff = abs(s.lhs - s.rhs);
  Real scale = max(abs(s.lhs), abs(s.rhs));
  entry.abs_err = err_str(diff);
  entry.rel_err = scale.is_zero() ? err_str(diff) : err_str(diff / scale);
  Real tol = scale * Real::of(inst.tolerance, ctx.bits()) + s.lhs_bound +
             s.rhs_bound;
  entry.status = diff <= tol ? "PASS" : "FAIL";
  return entry;
}

// Pointwise checks compare against an analytic absolute tail bound.
ReportEntry finish_pointwise(const IdentityInstance& inst,
                             const PrecisionContext& ctx, const Real& lhs,
                             const Real& rhs, const Real& bound) {
  ReportEntry entry;
  entry.lhs = value_str(lhs, ctx);
  entry.rhs = value_str(rhs, ctx);
  Real diff = abs(lhs - rhs);
  Real scale = max(abs(lhs), abs(rhs));
  entry.abs_err = err_str(diff);
  entry.rel_err = scale.is_zero() ? err_str(diff) : err_str(diff / scale);
  entry.status = diff <= bound ? "PASS" : "FAIL";
  (void)inst;
  return entry;
}

SeriesFamily series_family_for(const std::string& id) {
  if (id == "T3.1" || id == "C3.2" || id == "P3.3")
    return SeriesFamily::zeta_family;
  if (id == "T3.4" || id == "P3.5") return SeriesFamily::t_family;
  if (id == "T3.6" || id == "C3.7") return SeriesFamily::nested_S_family;
  if (id == "T3.8") return SeriesFamily::nested_T_family;
  throw DomainViolation("no series family for id " + id);
}

SeriesSettings series_settings(const CheckSettings& cs) {
  return SeriesSettings{cs.series_horizon, cs.ladder_depth,
                        cs.series_digits_target};
}

ReportEntry check_series_vs_integral(const IdentityInstance& inst,
                                     const PrecisionContext& ctx,
                                     const CheckSettings& cs) {
  int j = static_cast<int>(param_long(inst, "j"));
  int k = static_cast<int>(param_long(inst, "k"));
  SeriesFamily family = series_family_for(inst.id);
  AcceleratedValue lhs =
      series_accelerated(SeriesSpec{family, j, k}, ctx, series_settings(cs));
  IntegralValue rhs = rhs_integral(family, j, k, ctx);
  return finish_numeric(inst, ctx,
                        {lhs.value, rhs.value, lhs.error_bound,
                         rhs.error_bound});
}

Real closed_form_value(const std::string& id, int j,
                       const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.bits();
  if (id == "C3.2") return 2 * dirichlet(DirichletKind::eta, 2 * j + 1, ctx);
  if (id == "C3.7") {
    return 4 * dirichlet(DirichletKind::lambda, 2 * j + 1, ctx);
  }
  if (id == "P3.3") {
    Real acc = Real::of(0L, p);
    for (int i = 0; i <= 2 * j + 2; ++i) {
      Real term = dirichlet(DirichletKind::eta, i, ctx) *
                  dirichlet(DirichletKind::eta, 2 * j + 2 - i, ctx);
      acc += i % 2 == 0 ? term : -term;
    }
    return ldexp(acc, 1);
  }
  if (id == "P3.5") {
    Real acc = Real::of(0L, p);
    for (int i = 0; i <= 2 * j; ++i) {
      Real term = dirichlet(DirichletKind::beta, i + 1, ctx) *
                  dirichlet(DirichletKind::beta, 2 * j + 1 - i, ctx);
      acc += i % 2 == 0 ? term : -term;
    }
    return ldexp(acc, 3);
  }
  throw DomainViolation("no closed form for id " + id);
}

ReportEntry check_closed_form(const IdentityInstance& inst,
                              const PrecisionContext& ctx,
                              const CheckSettings& cs) {
  int j = static_cast<int>(param_long(inst, "j"));
  int k = inst.id == "P3.3" ? 2 : 1;
  SeriesFamily family = series_family_for(inst.id);
  AcceleratedValue lhs =
      series_accelerated(SeriesSpec{family, j, k}, ctx, series_settings(cs));
  Real rhs = closed_form_value(inst.id, j, ctx);
  Real rhs_bound =
      abs(rhs) * Real::pow10(-(ctx.working_digits() - 2), ctx.bits());
  return finish_numeric(inst, ctx,
                        {lhs.value, rhs, lhs.error_bound, rhs_bound});
}

ReportEntry check_lemma23(const IdentityInstance& inst,
                          const PrecisionContext& ctx) {
  const bool variant_i = inst.id == "L2.3.i";
  int k = static_cast<int>(param_long(inst, "k"));
  if (k < 1) throw DomainViolation("L2.3: requires k >= 1");
  Real x = param_point(inst, "x", ctx);
  const mpfr_prec_t p = ctx.bits();

  Real sq = variant_i ? cos(x) : sin(x);
  Real arg = sq * sq;

  if (k == 1) {
    // conditionally convergent case: checked against the closed form
    // Li_1(cos^2 x) = -2 ln sin x (resp. -2 ln cos x)
    Real lhs = polylog_int(1, arg, ctx);
    Real rhs = variant_i ? -ldexp(log(sin(x)), 1) : -ldexp(log(cos(x)), 1);
    NumericSides sides{lhs, rhs,
                       abs(lhs) * Real::pow10(-(ctx.working_digits() - 2), p),
                       abs(rhs) * Real::pow10(-(ctx.working_digits() - 2), p)};
    return finish_numeric(inst, ctx, sides);
  }

  long N = param_long(inst, "N");
  Real partial = lemma23_partial(
      variant_i ? Lemma23Variant::i : Lemma23Variant::ii, k, x, N, ctx);
  Real target = polylog_int(k, arg, ctx);
  Real bound = lemma23_tail_bound(k, N, ctx) +
               abs(target) * Real::pow10(-(ctx.working_digits() - 4), p);
  return finish_pointwise(inst, ctx, partial, target, bound);
}

ReportEntry check_genfunc(const IdentityInstance& inst,
                          const PrecisionContext& ctx) {
  const bool eq36 = inst.id == "GF3.6";
  int j = static_cast<int>(param_long(inst, "j"));
  Real t = param_point(inst, "t", ctx);
  long N = param_long(inst, "N");

  GenFunc kind = eq36 ? GenFunc::eq36 : GenFunc::eq310;
  Real partial = gf_partial(kind, j, t, N, ctx);
  Real kernel = gf_kernel(kind, j, t, ctx);
  // geometric tail tolerance 10 t^{2N}, floored at working noise
  Real bound = 10 * pow(abs(t), static_cast<unsigned long>(2 * N)) +
               abs(kernel) *
                   Real::pow10(-(ctx.working_digits() - 4), ctx.bits());
  return finish_pointwise(inst, ctx, partial, kernel, bound);
}

}  // namespace

std::vector<FamilyDescriptor> catalog() {
  std::vector<FamilyDescriptor> fams;
  fams.push_back(
      {"L2.1", "exact",
       "power/multiple-angle moments over [0, pi/2], exact in Q[pi]",
       {{"L2.1.i", "m >= 0, n >= 1"},
        {"L2.1.ii", "m >= 1, n >= 1"},
        {"L2.1.iii", "m >= 0, n >= 0"},
        {"L2.1.iv", "m >= 1, n >= 0"}}});
  fams.push_back(
      {"L2.2", "exact",
       "power/trig-power moments over [0, pi/2], exact in Q[pi]",
       {{"L2.2.i", "m >= 0, n >= 1"},
        {"L2.2.ii", "m >= 0, n >= 1"},
        {"L2.2.iii", "m >= 1, n >= 1"},
        {"L2.2.iv", "m >= 1, n >= 1"}}});
  fams.push_back({"L2.3", "pointwise",
                  "coefficient-integral expansions of Li_k(cos^2 x) and "
                  "Li_k(sin^2 x), x in (0, pi/2)",
                  {{"L2.3.i", "k >= 1, x in (0, pi/2)"},
                   {"L2.3.ii", "k >= 1, x in (0, pi/2)"}}});
  fams.push_back({"T3.1", "series-integral", "j >= 0, k >= 1", {}});
  fams.push_back({"C3.2", "closed-form", "j >= 0", {}});
  fams.push_back({"P3.3", "closed-form", "j >= 0", {}});
  fams.push_back({"T3.4", "series-integral", "j >= 0, k >= 1", {}});
  fams.push_back({"P3.5", "closed-form", "j >= 0", {}});
  fams.push_back({"T3.6", "series-integral",
                  "j >= 1, k >= 1 (registry restricts the stated j >= 0)",
                  {}});
  fams.push_back({"C3.7", "closed-form", "j >= 1", {}});
  fams.push_back({"T3.8", "series-integral", "j >= 1, k >= 1", {}});
  fams.push_back({"GF3.6", "pointwise", "j >= 0, |t| < 1", {}});
  fams.push_back({"GF3.10", "pointwise", "j >= 1, |t| < 1", {}});
  return fams;
}

std::optional<std::string> catalog_domain(const std::string& id) {
  for (const auto& fam : catalog()) {
    if (fam.id == id) return fam.domain;
    for (const auto& [pid, dom] : fam.parts)
      if (pid == id) return dom;
  }
  return std::nullopt;
}

ReportEntry check(const IdentityInstance& inst, const PrecisionContext& ctx,
                  const CheckSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  ReportEntry entry;
  try {
    if (inst.id.rfind("L2.1", 0) == 0 || inst.id.rfind("L2.2", 0) == 0) {
      entry = check_exact_lemma(inst, ctx);
    } else if (inst.id.rfind("L2.3", 0) == 0) {
      entry = check_lemma23(inst, ctx);
    } else if (inst.id == "T3.1" || inst.id == "T3.4" || inst.id == "T3.6" ||
               inst.id == "T3.8") {
      entry = check_series_vs_integral(inst, ctx, settings);
    } else if (inst.id == "C3.2" || inst.id == "P3.3" || inst.id == "P3.5" ||
               inst.id == "C3.7") {
      entry = check_closed_form(inst, ctx, settings);
    } else if (inst.id == "GF3.6" || inst.id == "GF3.10") {
      entry = check_genfunc(inst, ctx);
    } else {
      throw DomainViolation("unknown identity id: " + inst.id);
    }
  } catch (const AccuracyError& e) {
    entry.status = "INCONCLUSIVE";
    entry.lhs = e.best_value().str(ctx.digits);
    entry.rhs = std::string("accuracy-not-reached: ") + e.what();
    entry.abs_err = e.bound().str(3);
    entry.rel_err = "";
  }
  entry.id = inst.id;
  entry.params = inst.params;
  entry.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return entry;
}

namespace {

struct Grid {
  std::string id;
  std::map<std::string, std::pair<long, long>> ranges;
  bool has_x = false;
  bool has_t = false;
  bool has_N = false;
  long default_N = 0;  // 0 = derived from digits and t
  CheckMode mode = CheckMode::numeric;
};

std::vector<Grid> default_grids() {
  std::vector<Grid> g;
  g.push_back({"L2.1.i", {{"m", {0, 6}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.1.ii", {{"m", {1, 6}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.1.iii", {{"m", {0, 6}}, {"n", {0, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.1.iv", {{"m", {1, 6}}, {"n", {0, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.2.i", {{"m", {0, 5}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.2.ii", {{"m", {0, 5}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.2.iii", {{"m", {1, 5}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.2.iv", {{"m", {1, 5}}, {"n", {1, 8}}}, false, false, false, 0, CheckMode::exact});
  g.push_back({"L2.3.i", {{"k", {1, 3}}}, true, false, true, 2000, CheckMode::numeric});
  g.push_back({"L2.3.ii", {{"k", {1, 3}}}, true, false, true, 2000, CheckMode::numeric});
  g.push_back({"T3.1", {{"j", {0, 2}}, {"k", {1, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"T3.4", {{"j", {0, 2}}, {"k", {1, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"T3.6", {{"j", {1, 2}}, {"k", {1, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"T3.8", {{"j", {1, 2}}, {"k", {1, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"C3.2", {{"j", {0, 4}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"P3.3", {{"j", {0, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"P3.5", {{"j", {0, 3}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"C3.7", {{"j", {1, 4}}}, false, false, false, 0, CheckMode::numeric});
  g.push_back({"GF3.6", {{"j", {0, 1}}}, false, true, true, 0, CheckMode::numeric});
  g.push_back({"GF3.10", {{"j", {1, 2}}}, false, true, true, 0, CheckMode::numeric});
  return g;
}

bool pattern_matches(const std::string& pattern, const std::string& id) {
  if (pattern == "*" || pattern == "all") return true;
  if (!pattern.empty() && pattern.back() == '*') {
    std::string prefix = pattern.substr(0, pattern.size() - 1);
    return id.rfind(prefix, 0) == 0;
  }
  // an exact family id also selects its part-qualified grids
  return id == pattern || id.rfind(pattern + ".", 0) == 0;
}

// Geometric-tail sample count: large enough that 10 t^{2N} ~ 10^-digits,
// so the tolerance stays resolvable above working noise.
long genfunc_default_N(const std::string& t_token, int digits) {
  double tv = 0.5;
  auto slash = t_token.find('/');
  if (slash != std::string::npos) {
    tv = std::stod(t_token.substr(0, slash)) /
         std::stod(t_token.substr(slash + 1));
  } else {
    tv = std::stod(t_token);
  }
  double n = digits * 2.302585092994046 / (2 * std::log(1.0 / tv));
  return std::max(8L, static_cast<long>(std::floor(n)));
}

}  // namespace

std::vector<IdentityInstance> expand_selector(const Selector& selector,
                                              const PrecisionContext& ctx) {
  // split comma-separated patterns
  std::vector<std::string> patterns;
  {
    std::string cur;
    for (char c : selector.pattern) {
      if (c == ',') {
        if (!cur.empty()) patterns.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) patterns.push_back(cur);
  }
  if (patterns.empty()) throw UsageError("empty selector pattern");

  std::vector<std::string> default_x = {"pi/6", "pi/4", "pi/3"};
  std::vector<std::string> default_t = {"1/4", "1/2", "3/4"};

  std::vector<IdentityInstance> out;
  for (const Grid& grid : default_grids()) {
    bool matched = false;
    for (const auto& pat : patterns)
      if (pattern_matches(pat, grid.id)) matched = true;
    if (!matched) continue;

    auto ranges = grid.ranges;
    for (const auto& [key, rng] : selector.ranges) {
      if (ranges.count(key)) ranges[key] = rng;
    }

    // enumerate the integer grid
    std::vector<std::map<std::string, std::string>> combos{{}};
    for (const auto& [key, rng] : ranges) {
      if (rng.first > rng.second)
        throw UsageError("empty range for parameter " + key);
      std::vector<std::map<std::string, std::string>> next;
      for (const auto& combo : combos) {
        for (long v = rng.first; v <= rng.second; ++v) {
          auto c = combo;
          c[key] = std::to_string(v);
          next.push_back(std::move(c));
        }
      }
      combos = std::move(next);
    }

    // point parameters
    if (grid.has_x) {
      const auto& xs = selector.x_values.empty() ? default_x : selector.x_values;
      std::vector<std::map<std::string, std::string>> next;
      for (const auto& combo : combos)
        for (const auto& x : xs) {
          auto c = combo;
          c["x"] = x;
          next.push_back(std::move(c));
        }
      combos = std::move(next);
    }
    if (grid.has_t) {
      const auto& ts = selector.t_values.empty() ? default_t : selector.t_values;
      std::vector<std::map<std::string, std::string>> next;
      for (const auto& combo : combos)
        for (const auto& t : ts) {
          auto c = combo;
          c["t"] = t;
          next.push_back(std::move(c));
        }
      combos = std::move(next);
    }
    if (grid.has_N) {
      for (auto& combo : combos) {
        long N;
        if (selector.N) {
          N = *selector.N;
        } else if (grid.default_N > 0) {
          N = grid.default_N;
        } else {
          N = genfunc_default_N(combo.at("t"), ctx.digits);
        }
        combo["N"] = std::to_string(N);
      }
    }

    for (auto& combo : combos) {
      // L2.3 k=1 instances verify the closed form; N is irrelevant there
      if (grid.id.rfind("L2.3", 0) == 0 && combo.at("k") == "1")
        combo.erase("N");
      IdentityInstance inst;
      inst.id = grid.id;
      inst.params = std::move(combo);
      inst.mode = grid.mode;
      inst.tolerance = selector.tolerance;
      out.push_back(std::move(inst));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const IdentityInstance& a, const IdentityInstance& b) {
              if (a.id != b.id) return a.id < b.id;
              return a.params < b.params;
            });
  return out;
}

namespace {

std::string iso_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

VerificationReport run_suite(const Selector& selector,
                             const PrecisionContext& ctx,
                             const CheckSettings& settings) {
  std::vector<IdentityInstance> instances = expand_selector(selector, ctx);
  if (instances.empty())
    throw UsageError("selector matched no identity instances: " +
                     selector.pattern);

  VerificationReport report;
  report.timestamp = iso_utc_now();
  report.digits = ctx.digits;
  report.entries.resize(instances.size());

  const int workers =
      std::max(1, std::min<int>(settings.workers,
                                static_cast<int>(instances.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      report.entries[i] = check(instances[i], ctx, settings);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) break;
        try {
          report.entries[i] = check(instances[i], ctx, settings);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  report.summary.total = static_cast<long>(report.entries.size());
  for (const auto& e : report.entries) {
    if (e.status == "PASS") ++report.summary.pass;
    else if (e.status == "FAIL") ++report.summary.fail;
    else ++report.summary.inconclusive;
  }
  return report;
}

}  // namespace apery
