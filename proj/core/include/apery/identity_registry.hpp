#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apery/precision.hpp"

namespace apery {

enum class CheckMode { exact, numeric };

// One parametrized, checkable identity. Parameter values are kept as
// strings ("m" -> "3", "x" -> "pi/6", "t" -> "1/2") so instances order and
// serialize deterministically.
struct IdentityInstance {
  std::string id;  // "L2.1.i", "T3.1", "C3.2", "GF3.6", ...
  std::map<std::string, std::string> params;
  CheckMode mode = CheckMode::numeric;
  double tolerance = 1e-8;  // relative, numeric mode only
};

struct ReportEntry {
  std::string id;
  std::map<std::string, std::string> params;
  std::string lhs;   // decimal string or Q[pi] rendering
  std::string rhs;
  std::string abs_err;  // exactly "0" for exact-mode PASS
  std::string rel_err;
  std::string status;  // PASS | FAIL | INCONCLUSIVE
  double elapsed_seconds = 0.0;
};

struct VerificationReport {
  std::string version = "1";
  std::string timestamp;  // ISO-8601 UTC
  int digits = 20;
  std::vector<ReportEntry> entries;
  struct Summary {
    long total = 0;
    long pass = 0;
    long fail = 0;
    long inconclusive = 0;
  } summary;
};

struct FamilyDescriptor {
  std::string id;    // "L2.1", "T3.1", ...
  std::string kind;  // exact | series-integral | closed-form | pointwise
  std::string domain;
  // part-qualified ids with their own domains (lemma families only)
  std::vector<std::pair<std::string, std::string>> parts;
};

// The thirteen identity families of the catalog.
std::vector<FamilyDescriptor> catalog();

// Domain text for a family id or a part-qualified id; nullopt if unknown.
std::optional<std::string> catalog_domain(const std::string& id);

struct CheckSettings {
  long series_horizon = 0;  // 0 = family default
  int ladder_depth = 0;     // 0 = family default
  int series_digits_target = 10;
  int workers = 1;
};

// Evaluates both sides of one instance. Exact ids compare Q[pi] values with
// zero tolerance; numeric ids stack both sides' reported error bounds on top
// of the relative tolerance; pointwise ids use their analytic tail bound.
// Out-of-domain instances are rejected with a DomainViolation naming the
// violated constraint. An evaluator that cannot certify its accuracy yields
// status INCONCLUSIVE, never a false FAIL.
ReportEntry check(const IdentityInstance& instance, const PrecisionContext& ctx,
                  const CheckSettings& settings = {});

// Instance selection: one or more comma-separated id patterns (exact ids,
// part-qualified ids, or prefix globs like "L2.*"), with optional overrides
// of the per-family default parameter grids.
struct Selector {
  std::string pattern = "*";
  std::map<std::string, std::pair<long, long>> ranges;  // j/k/m/n inclusive
  std::vector<std::string> x_values;  // tokens like "pi/6"
  std::vector<std::string> t_values;  // rationals like "1/2"
  std::optional<long> N;
  double tolerance = 1e-8;
};

std::vector<IdentityInstance> expand_selector(const Selector& selector,
                                              const PrecisionContext& ctx);

// Runs every selected instance (optionally on several worker threads; the
// report order is independent of scheduling) and assembles the report.
// Throws UsageError when the selection is empty.
VerificationReport run_suite(const Selector& selector,
                             const PrecisionContext& ctx,
                             const CheckSettings& settings = {});

}  // namespace apery
