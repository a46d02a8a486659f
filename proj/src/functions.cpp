#include "opineq/functions.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <utility>

#include "opineq/error.hpp"

namespace opineq {

ScalarFunctionSpec::ScalarFunctionSpec(std::string name,
                                       std::function<double(double)> evaluate,
                                       FunctionDomain domain, FunctionFlags flags,
                                       std::shared_ptr<const ScalarFunctionSpec> inverse)
    : name_(std::move(name)),
      evaluate_(std::move(evaluate)),
      domain_(domain),
      flags_(flags),
      inverse_(std::move(inverse)) {}

const ScalarFunctionSpec& ScalarFunctionSpec::inverse() const {
  if (!inverse_) throw DomainError("function " + name_ + " has no registered inverse");
  return *inverse_;
}

bool ScalarFunctionSpec::normalized() const {
  return std::abs(evaluate_(1.0) - 1.0) <= 1e-12;
}

namespace catalog {
namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer the short form when it round-trips.
  char shortbuf[64];
  std::snprintf(shortbuf, sizeof shortbuf, "%.15g", v);
  if (std::strtod(shortbuf, nullptr) == v) return shortbuf;
  return buf;
}

bool is_nonnegative_integer(double p) { return p >= 0 && std::floor(p) == p; }

FunctionFlags power_flags(double p) {
  FunctionFlags f;
  if (p == 1.0) {
    f.convex = f.concave = true;
    f.operator_convex = f.operator_concave = true;
    f.operator_monotone_increasing = true;
    f.one_to_one = true;
    return f;
  }
  if (p == 0.0) {
    f.convex = f.concave = true;
    f.operator_convex = f.operator_concave = true;
    f.operator_monotone_increasing = f.operator_monotone_decreasing = true;
    return f;
  }
  f.one_to_one = true;
  if (p > 1.0 || p < 0.0) f.convex = true;
  if (p > 0.0 && p < 1.0) f.concave = true;
  if (p >= 1.0 && p <= 2.0) f.operator_convex = true;
  if (p > 0.0 && p <= 1.0) {
    f.operator_monotone_increasing = true;
    f.operator_concave = true;
  }
  if (p >= -1.0 && p < 0.0) {
    f.operator_convex = true;
    f.operator_monotone_decreasing = true;
  }
  return f;
}

ScalarFunctionSpec power_without_inverse(double p) {
  std::function<double(double)> eval;
  if (p == 1.0) {
    eval = [](double t) { return t; };
  } else if (p == 2.0) {
    eval = [](double t) { return t * t; };
  } else if (p == -1.0) {
    eval = [](double t) { return 1.0 / t; };
  } else if (p == 0.5) {
    eval = [](double t) { return std::sqrt(t); };
  } else {
    eval = [p](double t) { return std::pow(t, p); };
  }
  const auto domain =
      is_nonnegative_integer(p) ? FunctionDomain::kReal : FunctionDomain::kPositive;
  return {"pow(" + format_number(p) + ")", std::move(eval), domain, power_flags(p)};
}

}  // namespace

ScalarFunctionSpec power(double p) {
  auto base = power_without_inverse(p);
  if (p == 0.0) return base;
  auto inv = std::make_shared<const ScalarFunctionSpec>(power_without_inverse(1.0 / p));
  return {base.name(), [base](double t) { return base(t); }, base.domain(), base.flags(),
          std::move(inv)};
}

ScalarFunctionSpec identity() { return power(1.0); }
ScalarFunctionSpec square() { return power(2.0); }
ScalarFunctionSpec sqrt() { return power(0.5); }
ScalarFunctionSpec reciprocal() { return power(-1.0); }

namespace {

ScalarFunctionSpec exp_without_inverse() {
  FunctionFlags f;
  f.convex = true;
  f.one_to_one = true;
  return {"exp", [](double t) { return std::exp(t); }, FunctionDomain::kReal, f};
}

ScalarFunctionSpec log_without_inverse() {
  FunctionFlags f;
  f.concave = true;
  f.operator_concave = true;
  f.operator_monotone_increasing = true;
  f.one_to_one = true;
  return {"log", [](double t) { return std::log(t); }, FunctionDomain::kPositive, f};
}

}  // namespace

ScalarFunctionSpec log() {
  auto base = log_without_inverse();
  return {base.name(), [](double t) { return std::log(t); }, base.domain(), base.flags(),
          std::make_shared<const ScalarFunctionSpec>(exp_without_inverse())};
}

ScalarFunctionSpec exp() {
  auto base = exp_without_inverse();
  return {base.name(), [](double t) { return std::exp(t); }, base.domain(), base.flags(),
          std::make_shared<const ScalarFunctionSpec>(log_without_inverse())};
}

ScalarFunctionSpec affine(double slope, double intercept) {
  FunctionFlags f;
  f.convex = f.concave = true;
  f.operator_convex = f.operator_concave = true;
  f.operator_monotone_increasing = slope >= 0;
  f.operator_monotone_decreasing = slope <= 0;
  f.one_to_one = slope != 0;
  const std::string name =
      "affine(" + format_number(slope) + "," + format_number(intercept) + ")";
  std::shared_ptr<const ScalarFunctionSpec> inv;
  if (slope != 0) {
    FunctionFlags fi = f;
    fi.operator_monotone_increasing = slope > 0;
    fi.operator_monotone_decreasing = slope < 0;
    inv = std::make_shared<const ScalarFunctionSpec>(
        "affine(" + format_number(1.0 / slope) + "," + format_number(-intercept / slope) + ")",
        [slope, intercept](double t) { return (t - intercept) / slope; },
        FunctionDomain::kReal, fi);
  }
  return {name, [slope, intercept](double t) { return slope * t + intercept; },
          FunctionDomain::kReal, f, std::move(inv)};
}

ScalarFunctionSpec by_name(const std::string& name) {
  static const std::regex pow_re(R"(pow\(([-+0-9.eE]+)\))");
  static const std::regex affine_re(R"(affine\(([-+0-9.eE]+),([-+0-9.eE]+)\))");
  std::smatch match;
  if (std::regex_match(name, match, pow_re)) return power(std::stod(match[1].str()));
  if (std::regex_match(name, match, affine_re))
    return affine(std::stod(match[1].str()), std::stod(match[2].str()));
  if (name == "log") return log();
  if (name == "exp") return exp();
  throw DomainError("unknown catalog function: " + name);
}

}  // namespace catalog
}  // namespace opineq
