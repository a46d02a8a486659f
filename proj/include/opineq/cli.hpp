#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opineq/hermitian.hpp"

namespace opineq::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,  // a true check failed, a candidate survived, constants disagree
  kUsageError = 2,         // bad flags, unknown check, malformed input values
  kIoError = 3,            // unreadable or unwritable file
  kComputationError = 4,   // numerical failure such as Jacobi non-convergence
};

enum class Command { kList, kCheck, kSuite, kConstants, kCounterexample, kFalsify };
enum class Format { kJson, kText };

struct RunConfig {
  Command command = Command::kList;
  std::vector<std::string> names;
  std::vector<Index> dims;  // empty: the command's default
  long trials = 200;
  std::uint64_t seed = 42;
  double tol = kDefaultLoewnerTolerance;
  unsigned threads = 0;
  bool include_candidates = false;

  // constants
  double m = 1.0;
  double big_m = 2.0;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<std::string> function;

  // counterexample
  double x_param = 2.0;
  double alpha_rad = 0.0;
  double beta_rad = 0.0;

  // falsify
  bool grid = false;
  std::optional<long> budget;
  std::optional<std::string> output_dir;

  // check: a single fixture instead of random trials
  std::optional<std::string> instance_path;

  std::optional<std::string> output_path;
  Format format = Format::kJson;
  bool timestamp = true;
};

/// Radians from "1.047", "pi", "-pi/4", "pi/3", "2*pi/3", "5pi/12".
/// Throws std::invalid_argument.
double parse_angle(const std::string& text);

/// OPINEQ_SEED when set (must be an unsigned integer), otherwise 42.
/// Throws std::invalid_argument for a malformed value.
std::uint64_t default_seed();

/// Parse argv into a config. On failure or --help, returns nullopt and sets
/// `exit_code` (0 for help, kUsageError otherwise) after printing to `err`.
std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out,
                               std::ostream& err, int& exit_code);

/// Execute a parsed config; the report goes to `out` unless an output path
/// is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main(int argc, const char* const* argv);

}  // namespace opineq::cli
