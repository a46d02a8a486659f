#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "opineq/checks.hpp"

namespace opineq {

struct ViolationReport {
  std::string check_name;  // the failing result, e.g. "refinement.left"
  /// {"check": registry name, "variant": label, "instance": fixture JSON, ...}
  /// plus {"x", "alpha", "beta"} for the rotation-mixture grid.
  nlohmann::json witness;
  double margin = 0.0;
  std::vector<double> eigenvalue_certificate;

  nlohmann::json to_json() const;
  static ViolationReport from_json(const nlohmann::json& j);
};

/// The three-parameter family A = diag(x, 1), Phi = (U_a* . U_a + U_b* . U_b)/2.
struct FamilyGrid {
  std::vector<double> xs;
  std::vector<double> alphas;
  std::vector<double> betas;

  /// x in {0.5, 1, ..., 4}, alpha and beta in {k pi/12 : k = 0..11}.
  static FamilyGrid standard();
  std::size_t size() const { return xs.size() * alphas.size() * betas.size(); }
};

struct SearchConfig {
  std::uint64_t seed = 42;
  /// Random instances per variant of the check; ignored by grid searches.
  long budget = 0;
  std::vector<Index> dims = {2, 3, 4};
  double tol = kDefaultLoewnerTolerance;
  unsigned threads = 0;
};

/// Exhaustive search over the family grid. The check must support it.
/// Reports come out in grid order (x outermost, then alpha, then beta).
std::vector<ViolationReport> search_violations(const std::string& check_name,
                                               const FamilyGrid& grid,
                                               double tol = kDefaultLoewnerTolerance);

/// Random search through the check's own instance generator. Reports come
/// out in (variant, trial) order whatever the thread count.
std::vector<ViolationReport> search_violations(const std::string& check_name,
                                               const SearchConfig& config);

/// Re-run the check on the serialized witness. Returns the reproduced result
/// with the report's check_name; throws Error if that result is missing.
CheckResult revalidate(const ViolationReport& report);

}  // namespace opineq
