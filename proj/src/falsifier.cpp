#include "opineq/falsifier.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <thread>

#include "opineq/error.hpp"
#include "opineq/json_io.hpp"
#include "opineq/registry.hpp"

namespace opineq {

using nlohmann::json;

json ViolationReport::to_json() const {
  return {{"check_name", check_name},
          {"witness", witness},
          {"margin", margin},
          {"eigenvalue_certificate", eigenvalue_certificate}};
}

ViolationReport ViolationReport::from_json(const json& j) {
  if (!j.is_object() || !j.contains("check_name") || !j.contains("witness") ||
      !j.contains("margin"))
    throw DomainError("violation report needs check_name, witness and margin");
  ViolationReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.witness = j.at("witness");
  r.margin = j.at("margin").get<double>();
  if (j.contains("eigenvalue_certificate"))
    r.eigenvalue_certificate = j.at("eigenvalue_certificate").get<std::vector<double>>();
  return r;
}

FamilyGrid FamilyGrid::standard() {
  FamilyGrid g;
  for (int i = 1; i <= 8; ++i) g.xs.push_back(0.5 * i);
  for (int k = 0; k < 12; ++k) g.alphas.push_back(k * std::numbers::pi / 12.0);
  g.betas = g.alphas;
  return g;
}

namespace {

void collect(const std::vector<CheckResult>& results, const json& witness_base,
             std::vector<ViolationReport>& out) {
  for (const auto& r : results) {
    if (r.holds) continue;
    ViolationReport v;
    v.check_name = r.check_name;
    v.witness = witness_base;
    v.margin = r.margin;
    v.eigenvalue_certificate = r.difference_eigenvalues;
    out.push_back(std::move(v));
  }
}

}  // namespace

std::vector<ViolationReport> search_violations(const std::string& check_name,
                                               const FamilyGrid& grid, double tol) {
  const auto& entry = find_check(check_name);
  if (!entry.supports_family_grid)
    throw HypothesisError(check_name + " cannot be evaluated on the rotation-mixture family");
  const auto& variant = entry.variants.front();
  std::vector<ViolationReport> out;
  for (double x : grid.xs)
    for (double a : grid.alphas)
      for (double b : grid.betas) {
        const auto inst = counterexample_instance(x, a, b);
        const auto results = evaluate_variant(entry, variant, inst, tol);
        if (std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; }))
          continue;
        const json witness = {{"check", entry.name},
                              {"variant", variant.label},
                              {"mode", "grid"},
                              {"x", x},
                              {"alpha", a},
                              {"beta", b},
                              {"tolerance", tol},
                              {"instance", instance_to_json(inst)}};
        collect(results, witness, out);
      }
  return out;
}

std::vector<ViolationReport> search_violations(const std::string& check_name,
                                               const SearchConfig& config) {
  const auto& entry = find_check(check_name);
  if (config.budget < 0) throw DomainError("search budget must be nonnegative");
  if (config.dims.empty()) throw DomainError("at least one dimension is required");

  struct Task {
    std::size_t variant;
    long trial;
  };
  std::vector<Task> tasks;
  for (std::size_t v = 0; v < entry.variants.size(); ++v)
    for (long t = 0; t < config.budget; ++t) tasks.push_back({v, t});

  std::vector<std::vector<ViolationReport>> found(tasks.size());
  const auto work = [&](std::size_t i) {
    const auto& variant = entry.variants[tasks[i].variant];
    const long trial = tasks[i].trial;
    const Index dim = config.dims[static_cast<std::size_t>(trial) % config.dims.size()];
    auto rng = trial_stream(config.seed, "falsify", entry, variant, static_cast<std::uint64_t>(trial));
    const auto inst = entry.generate(rng, dim, variant);
    const auto results = evaluate_variant(entry, variant, inst, config.tol);
    if (std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; })) return;
    const json witness = {{"check", entry.name},
                          {"variant", variant.label},
                          {"mode", "random"},
                          {"seed", config.seed},
                          {"trial", trial},
                          {"tolerance", config.tol},
                          {"instance", instance_to_json(inst)}};
    collect(results, witness, found[i]);
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
          try {
            work(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ViolationReport> out;
  for (auto& f : found)
    for (auto& v : f) out.push_back(std::move(v));
  return out;
}

CheckResult revalidate(const ViolationReport& report) {
  const auto& w = report.witness;
  if (!w.is_object() || !w.contains("check") || !w.contains("instance"))
    throw DomainError("witness needs the check name and the instance");
  const auto& entry = find_check(w.at("check").get<std::string>());
  const std::string label = w.value("variant", entry.variants.front().label);
  const auto it = std::find_if(entry.variants.begin(), entry.variants.end(),
                               [&](const CheckVariant& v) { return v.label == label; });
  if (it == entry.variants.end()) throw DomainError("unknown variant " + label);
  const double tol = w.value("tolerance", kDefaultLoewnerTolerance);
  const auto inst = instance_from_json(w.at("instance"));
  for (auto& r : evaluate_variant(entry, *it, inst, tol))
    if (r.check_name == report.check_name) return r;
  throw Error("witness does not produce a result named " + report.check_name);
}

}  // namespace opineq
