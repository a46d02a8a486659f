#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "opineq/checks.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// One parameter setting of a registered check, e.g. r = 2 for the power
/// inner product. `params` is folded into every result it produces.
struct CheckVariant {
  std::string label;
  nlohmann::json params = nlohmann::json::object();
};

struct CheckEntry {
  std::string name;
  std::string statement;
  bool expected_to_hold = true;
  /// True when the check reads nothing but A, the map and the interval, so it
  /// can be evaluated on the 2x2 rotation-mixture family.
  bool supports_family_grid = false;
  std::vector<CheckVariant> variants;
  /// Random hypothesis package for `variant` at operand dimension `dim`.
  std::function<CheckInstance(RandomStream&, Index dim, const CheckVariant& variant)> generate;
  std::function<std::vector<CheckResult>(const CheckInstance&, double tol)> evaluate;
};

/// Registry in a fixed order: the true statements first, then candidates
/// that are expected to fail.
const std::vector<CheckEntry>& check_registry();
/// Throws UnknownCheckError.
const CheckEntry& find_check(const std::string& name);

/// The interval choices of the soundness sweep: (1,2), (1,4), (0.5,3).
const std::vector<SpectralInterval>& sweep_intervals();

struct SuiteConfig {
  std::string suite = "custom";
  /// Empty means every expected-to-hold check.
  std::vector<std::string> names;
  std::vector<Index> dims = {2, 4, 6};
  /// Trials per variant.
  long trials = 200;
  std::uint64_t seed = 42;
  double tol = kDefaultLoewnerTolerance;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Failure records kept per check in the report.
  std::size_t max_failures_per_check = 10;
};

struct CheckSummary {
  std::string name;
  bool expected_to_hold = true;
  long evaluations = 0;
  long failures = 0;
  long errors = 0;
  double min_margin = 0.0;
  double min_normalized_margin = 0.0;
  /// Result with the smallest normalized margin.
  CheckResult worst;
  /// Largest refinement gap seen; only meaningful for "refinement".
  double max_gap = 0.0;
  /// Outcome matched the expectation (no failures for a true statement, at
  /// least one failure for a candidate).
  bool ok = true;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckSummary> checks;
  /// Failure and error records, ordered by (check, variant, trial).
  nlohmann::json failures = nlohmann::json::array();
  /// Over expected-to-hold checks only.
  double min_margin = 0.0;
  bool ok = true;

  nlohmann::json to_json() const;
};

/// Every trial draws from its own stream keyed by (seed, check name and
/// variant, trial index), and results are merged in trial order, so the
/// report does not depend on the thread count.
SuiteReport run_suite(const SuiteConfig& config);

/// The stream used for one trial; shared by the suite and the falsifier.
RandomStream trial_stream(std::uint64_t seed, std::string_view purpose, const CheckEntry& entry,
                          const CheckVariant& variant, std::uint64_t trial);

/// Evaluate and stamp every result with the variant parameters.
std::vector<CheckResult> evaluate_variant(const CheckEntry& entry, const CheckVariant& variant,
                                          const CheckInstance& inst, double tol);

}  // namespace opineq
