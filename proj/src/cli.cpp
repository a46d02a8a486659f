#include "opineq/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opineq/constants.hpp"
#include "opineq/error.hpp"
#include "opineq/falsifier.hpp"
#include "opineq/json_io.hpp"
#include "opineq/registry.hpp"

namespace opineq::cli {

using nlohmann::json;

namespace {

// Thrown for unreadable or unwritable files so run() can map it to kIoError.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr long kOracleGridPoints = 1'000'000;
constexpr double kConstantAgreement = 1e-8;

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters in number: " + s);
  return v;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit(const RunConfig& config, json report, std::ostream& out) {
  if (config.timestamp) report["timestamp"] = utc_timestamp();
  const std::string text =
      config.format == Format::kJson ? report.dump(2) + "\n" : json_to_text(report);
  if (!config.output_path || *config.output_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(*config.output_path);
  if (!f) throw IoError("cannot open " + *config.output_path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + *config.output_path);
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.trials < 1) throw UsageError("--trials must be >= 1");
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  for (Index d : c.dims)
    if (d < 1) throw UsageError("dimensions must be >= 1");
  if (!(c.m > 0.0) || !(c.m <= c.big_m)) throw UsageError("need 0 < m <= M");
  if (c.budget && *c.budget < 0) throw UsageError("--budget must be >= 0");
  for (const auto& n : c.names) find_check(n);  // unknown names fail before any work
}

// ---------------------------------------------------------------------------

int run_list(const RunConfig& config, std::ostream& out) {
  json checks = json::array();
  for (const auto& e : check_registry()) {
    json variants = json::array();
    for (const auto& v : e.variants) variants.push_back(v.label);
    checks.push_back({{"name", e.name},
                      {"statement", e.statement},
                      {"expected_to_hold", e.expected_to_hold},
                      {"supports_family_grid", e.supports_family_grid},
                      {"variants", std::move(variants)}});
  }
  emit(config, {{"checks", std::move(checks)}}, out);
  return kOk;
}

int run_single_instance(const RunConfig& config, std::ostream& out) {
  if (config.names.size() != 1) throw UsageError("--instance needs exactly one --name");
  const auto& entry = find_check(config.names.front());
  const auto j = read_json_file(*config.instance_path);
  const auto inst = instance_from_json(j);
  const auto& variant = entry.variants.front();
  json results = json::array();
  bool all_hold = true;
  for (const auto& r : evaluate_variant(entry, variant, inst, config.tol)) {
    all_hold = all_hold && r.holds;
    results.push_back(result_to_json(r));
  }
  const bool ok = entry.expected_to_hold ? all_hold : !all_hold;
  emit(config,
       {{"suite", "instance"},
        {"check_name", entry.name},
        {"expected_to_hold", entry.expected_to_hold},
        {"results", std::move(results)},
        {"ok", ok}},
       out);
  return ok ? kOk : kExpectationFailed;
}

int run_suite_command(const RunConfig& config, std::ostream& out) {
  SuiteConfig sc;
  sc.suite = config.command == Command::kCheck ? "check" : "default";
  sc.names = config.names;
  if (config.command == Command::kSuite && sc.names.empty() && config.include_candidates)
    for (const auto& e : check_registry()) sc.names.push_back(e.name);
  if (config.command == Command::kCheck && sc.names.empty())
    throw UsageError("check needs at least one --name");
  if (!config.dims.empty()) sc.dims = config.dims;
  sc.trials = config.trials;
  sc.seed = config.seed;
  sc.tol = config.tol;
  sc.threads = config.threads;
  const auto report = run_suite(sc);
  emit(config, report.to_json(), out);
  return report.ok ? kOk : kExpectationFailed;
}

// Constants: value from the library, oracle from a plain 10^6-point grid.

json constant_record(const std::string& name, double value, double oracle, json params) {
  return {{"name", name},
          {"value", value},
          {"oracle_value", oracle},
          {"abs_diff", std::abs(value - oracle)},
          {"params", std::move(params)}};
}

double grid_max(const std::function<double(double)>& g, double lo, double hi) {
  return grid_maximize(g, lo, hi, kOracleGridPoints).value;
}

double chord_ratio_oracle(const ScalarFunctionSpec& f, const SpectralInterval& iv) {
  if (iv.degenerate()) return 1.0;
  const auto line = chord(f, iv);
  return grid_max([&](double t) { return line(t) / f(t); }, iv.lower(), iv.upper());
}

json constant_entry(const std::string& name, const RunConfig& c) {
  const SpectralInterval iv(c.m, c.big_m);
  json params = {{"m", c.m}, {"M", c.big_m}};
  if (name == "kantorovich")
    return constant_record(name, kantorovich_constant(iv),
                           chord_ratio_oracle(catalog::reciprocal(), iv), params);
  if (name == "generalized_kantorovich") {
    if (!c.p) throw UsageError("generalized_kantorovich needs --p");
    params["p"] = *c.p;
    return constant_record(name, generalized_kantorovich(*c.p, iv),
                           chord_ratio_oracle(catalog::power(*c.p), iv), params);
  }
  if (name == "alpha") {
    const auto f = catalog::by_name(c.function.value_or("pow(2)"));
    params["function"] = f.name();
    return constant_record(name, alpha_constant(f, iv), chord_ratio_oracle(f, iv), params);
  }
  if (name == "beta0") {
    const auto f = catalog::by_name(c.function.value_or("pow(0.5)"));
    params["function"] = f.name();
    double oracle = 0.0;
    if (!iv.degenerate()) {
      const auto line = chord(f, iv);
      oracle = grid_max([&](double t) { return f(t) - line(t); }, iv.lower(), iv.upper());
    }
    return constant_record(name, beta0_constant(f, iv), oracle, params);
  }
  if (name == "beta_p") {
    if (!c.p) throw UsageError("beta_p needs --p");
    const double p = *c.p;
    params["p"] = p;
    double oracle = 0.0;
    if (!iv.degenerate() && p != 1.0) {
      const SpectralInterval piv(std::pow(c.m, p), std::pow(c.big_m, p));
      const auto root = catalog::power(1.0 / p);
      const auto line = chord(root, piv);
      oracle = 2.0 * grid_max([&](double s) { return root(s) - line(s); }, piv.lower(), piv.upper());
    }
    return constant_record(name, beta_p_constant(p, iv), oracle, params);
  }
  if (name == "mond_pecaric_beta") {
    const auto f = catalog::by_name(c.function.value_or("pow(2)"));
    const double alpha = c.alpha.value_or(1.0);
    params["function"] = f.name();
    params["alpha"] = alpha;
    double oracle = (1.0 - alpha) * f(c.m);
    if (!iv.degenerate()) {
      const auto line = chord(f, iv);
      oracle = grid_max([&](double t) { return line(t) - alpha * f(t); }, iv.lower(), iv.upper());
    }
    return constant_record(name, mond_pecaric_beta(f, iv, alpha), oracle, params);
  }
  throw UsageError("unknown constant: " + name);
}

const std::vector<std::string>& constant_names() {
  static const std::vector<std::string> names = {"kantorovich", "generalized_kantorovich", "alpha",
                                                 "beta0", "beta_p", "mond_pecaric_beta"};
  return names;
}

int run_constants(const RunConfig& config, std::ostream& out) {
  std::vector<std::string> names = config.names;
  if (names.empty())
    for (const auto& n : constant_names())
      if (config.p || (n != "generalized_kantorovich" && n != "beta_p")) names.push_back(n);
  json records = json::array();
  bool agree = true;
  for (const auto& n : names) {
    auto rec = constant_entry(n, config);
    agree = agree && rec["abs_diff"].get<double>() <= kConstantAgreement;
    records.push_back(std::move(rec));
  }
  if (records.size() == 1)
    emit(config, records.front(), out);
  else
    emit(config, {{"constants", std::move(records)}}, out);
  return agree ? kOk : kExpectationFailed;
}

int run_counterexample(const RunConfig& config, std::ostream& out) {
  if (!(config.x_param > 0.0)) throw UsageError("--x must be positive");
  const auto ce = counterexample_T(config.x_param, config.alpha_rad, config.beta_rad, config.tol);
  const auto& t = ce.t.entries();
  const double det = (t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0)).real();
  emit(config,
       {{"x", config.x_param},
        {"alpha", config.alpha_rad},
        {"beta", config.beta_rad},
        {"T", matrix_to_json(ce.t)},
        {"eigenvalues", {ce.lambda_min, ce.lambda_max}},
        {"psd", ce.psd},
        {"trace", ce.t.trace()},
        {"determinant", det}},
       out);
  return kOk;
}

int run_falsify(const RunConfig& config, std::ostream& out) {
  if (config.names.size() != 1) throw UsageError("falsify needs exactly one --name");
  const auto& entry = find_check(config.names.front());
  const bool use_grid = config.grid || (!config.budget && entry.supports_family_grid);
  std::vector<ViolationReport> reports;
  json summary = {{"check", entry.name}, {"expected_to_hold", entry.expected_to_hold}};
  if (use_grid) {
    const auto grid = FamilyGrid::standard();
    reports = search_violations(entry.name, grid, config.tol);
    summary["mode"] = "grid";
    summary["evaluated"] = grid.size();
  } else {
    SearchConfig sc;
    sc.seed = config.seed;
    sc.budget = config.budget.value_or(1000);
    if (!config.dims.empty()) sc.dims = config.dims;
    sc.tol = config.tol;
    sc.threads = config.threads;
    reports = search_violations(entry.name, sc);
    summary["mode"] = "random";
    summary["seed"] = sc.seed;
    summary["evaluated"] = sc.budget * static_cast<long>(entry.variants.size());
  }
  summary["violations"] = reports.size();
  json files = json::array();
  if (config.output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*config.output_dir, ec);
    if (ec) throw IoError("cannot create " + *config.output_dir + ": " + ec.message());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::ostringstream name;
      name << entry.name << "-" << std::setw(5) << std::setfill('0') << i << ".json";
      const auto path = (std::filesystem::path(*config.output_dir) / name.str()).string();
      std::ofstream f(path);
      if (!f) throw IoError("cannot open " + path + " for writing");
      f << reports[i].to_json().dump(2) << "\n";
      if (!f) throw IoError("failed writing " + path);
      files.push_back(path);
    }
  }
  summary["files"] = std::move(files);
  if (!reports.empty()) {
    const auto worst = std::min_element(reports.begin(), reports.end(),
                                        [](const auto& a, const auto& b) { return a.margin < b.margin; });
    summary["min_margin"] = worst->margin;
    summary["worst"] = worst->to_json();
  } else {
    summary["min_margin"] = nullptr;
  }
  const bool ok = entry.expected_to_hold ? reports.empty() : !reports.empty();
  summary["ok"] = ok;
  emit(config, std::move(summary), out);
  return ok ? kOk : kExpectationFailed;
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?)\s*(?:(\d+(?:\.\d*)?|\.\d+)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?|\.\d+))?\s*$)",
      std::regex::icase);
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double v = std::numbers::pi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) {
      const double d = std::stod(m[3].str());
      if (d == 0.0) throw std::invalid_argument("angle divides by zero: " + text);
      v /= d;
    }
    return m[1].str() == "-" ? -v : v;
  }
  try {
    return parse_double(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an angle: " + text);
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("OPINEQ_SEED");
  if (env == nullptr || *env == '\0') return 42;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("OPINEQ_SEED must be an unsigned integer, got " + s);
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("OPINEQ_SEED out of range: " + s);
  }
}

std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out,
                               std::ostream& err, int& exit_code) {
  RunConfig c;
  try {
    c.seed = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    exit_code = kUsageError;
    return std::nullopt;
  }

  CLI::App app{"Numerical checks of operator inequalities for unital positive maps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "json";
  bool no_timestamp = false;
  std::string output;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp from reports");
  app.add_option("-o,--output", output, "write the report to this file");

  auto* list = app.add_subcommand("list", "print the check registry");

  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "master seed (default: OPINEQ_SEED or 42)");
    sub->add_option("--tol", c.tol, "relative Loewner tolerance");
    sub->add_option("--threads", c.threads, "worker threads, 0 = all cores");
  };

  auto* check = app.add_subcommand("check", "run seeded trials of named checks");
  check->add_option("-n,--name", c.names, "check name (repeatable)")->required();
  check->add_option("--dim", c.dims, "operand dimension (repeatable)");
  check->add_option("--trials", c.trials, "trials per variant");
  check->add_option("--instance", c.instance_path, "evaluate a fixture instance instead");
  add_run_options(check);

  auto* suite = app.add_subcommand("suite", "run every expected-to-hold check");
  suite->add_option("-n,--name", c.names, "restrict to these checks");
  suite->add_option("--dims", c.dims, "operand dimensions")->delimiter(',');
  suite->add_option("--trials", c.trials, "trials per variant");
  suite->add_flag("--include-candidates", c.include_candidates,
                  "also run checks that are expected to fail");
  add_run_options(suite);

  auto* constants = app.add_subcommand("constants", "evaluate constants against a grid oracle");
  constants->add_option("-n,--name", c.names,
                        "kantorovich, generalized_kantorovich, alpha, beta0, beta_p, "
                        "mond_pecaric_beta");
  constants->add_option("--m", c.m, "lower spectral bound");
  constants->add_option("--M", c.big_m, "upper spectral bound");
  constants->add_option("--p", c.p, "exponent");
  constants->add_option("--alpha", c.alpha, "Mond-Pecaric alpha");
  constants->add_option("--function", c.function, "catalog function, e.g. pow(1.5)");

  std::string alpha_text = "0";
  std::string beta_text = "0";
  auto* counter = app.add_subcommand("counterexample", "evaluate T(x, alpha, beta)");
  counter->add_option("--x", c.x_param, "positive parameter of A = diag(x, 1)");
  counter->add_option("--alpha", alpha_text, "first rotation angle (radians or pi/3 style)");
  counter->add_option("--beta", beta_text, "second rotation angle");
  counter->add_option("--tol", c.tol, "PSD tolerance");

  auto* falsify = app.add_subcommand("falsify", "search for violations of a check");
  falsify->add_option("-n,--name", c.names, "check name")->required();
  falsify->add_flag("--grid", c.grid, "search the rotation-mixture family grid");
  falsify->add_option("--budget", c.budget, "random trials per variant");
  falsify->add_option("--dims", c.dims, "operand dimensions")->delimiter(',');
  falsify->add_option("--output-dir", c.output_dir, "write one JSON file per violation");
  add_run_options(falsify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kOk : kUsageError;
    return std::nullopt;
  }

  c.format = format == "text" ? Format::kText : Format::kJson;
  c.timestamp = !no_timestamp;
  if (!output.empty()) c.output_path = output;
  if (*list) c.command = Command::kList;
  if (*check) c.command = Command::kCheck;
  if (*suite) c.command = Command::kSuite;
  if (*constants) c.command = Command::kConstants;
  if (*falsify) c.command = Command::kFalsify;
  if (*counter) {
    c.command = Command::kCounterexample;
    try {
      c.alpha_rad = parse_angle(alpha_text);
      c.beta_rad = parse_angle(beta_text);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      exit_code = kUsageError;
      return std::nullopt;
    }
  }
  exit_code = kOk;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command != Command::kConstants) validate(config);
    else if (!(config.m > 0.0) || !(config.m <= config.big_m))
      throw UsageError("need 0 < m <= M");
    switch (config.command) {
      case Command::kList:
        return run_list(config, out);
      case Command::kCheck:
        return config.instance_path ? run_single_instance(config, out)
                                    : run_suite_command(config, out);
      case Command::kSuite:
        return run_suite_command(config, out);
      case Command::kConstants:
        return run_constants(config, out);
      case Command::kCounterexample:
        return run_counterexample(config, out);
      case Command::kFalsify:
        return run_falsify(config, out);
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnknownCheckError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "computation error: " << e.what() << "\n";
    return kComputationError;
  } catch (const Error& e) {
    // Domain, dimension and hypothesis errors come from user-supplied values.
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

int main(int argc, const char* const* argv) {
  int code = kOk;
  const auto config = parse(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return run(*config, std::cout, std::cerr);
}

}  // namespace opineq::cli
