#pragma once

#include <functional>
#include <memory>
#include <string>

namespace opineq {

/// Properties of a scalar function that the inequalities rely on. These are
/// never inferred; the catalog below assigns them from standard facts.
struct FunctionFlags {
  bool convex = false;
  bool concave = false;
  bool operator_convex = false;
  bool operator_concave = false;
  bool operator_monotone_increasing = false;
  bool operator_monotone_decreasing = false;
  bool one_to_one = false;
};

enum class FunctionDomain {
  kPositive,  // open half-line (0, inf)
  kReal,
};

/// A scalar function f used for functional calculus, operator connections and
/// the chord constants. Immutable; cheap to copy.
class ScalarFunctionSpec {
 public:
  ScalarFunctionSpec(std::string name, std::function<double(double)> evaluate,
                     FunctionDomain domain, FunctionFlags flags,
                     std::shared_ptr<const ScalarFunctionSpec> inverse = nullptr);

  double operator()(double t) const { return evaluate_(t); }

  const std::string& name() const { return name_; }
  FunctionDomain domain() const { return domain_; }
  bool requires_positive() const { return domain_ == FunctionDomain::kPositive; }
  const FunctionFlags& flags() const { return flags_; }

  bool has_inverse() const { return inverse_ != nullptr; }
  /// Throws DomainError when no inverse is registered.
  const ScalarFunctionSpec& inverse() const;
  double inverse_evaluate(double t) const { return inverse()(t); }

  /// f(1) == 1, the normalization of an operator mean.
  bool normalized() const;

 private:
  std::string name_;
  std::function<double(double)> evaluate_;
  FunctionDomain domain_;
  FunctionFlags flags_;
  std::shared_ptr<const ScalarFunctionSpec> inverse_;
};

namespace catalog {

/// t^p. Flags: p in [1,2] operator convex; p in [0,1] operator monotone and
/// operator concave; p in [-1,0) operator convex and operator monotone
/// decreasing. Nonnegative integer exponents live on the whole real line.
ScalarFunctionSpec power(double p);
ScalarFunctionSpec identity();
ScalarFunctionSpec square();
ScalarFunctionSpec sqrt();
ScalarFunctionSpec reciprocal();
ScalarFunctionSpec log();
ScalarFunctionSpec exp();
ScalarFunctionSpec affine(double slope, double intercept);

/// Reverse of ScalarFunctionSpec::name(): "pow(1.5)", "log", "exp",
/// "affine(2,1)". Throws DomainError for unknown names.
ScalarFunctionSpec by_name(const std::string& name);

}  // namespace catalog
}  // namespace opineq
