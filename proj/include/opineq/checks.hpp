#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "opineq/functions.hpp"
#include "opineq/hermitian.hpp"
#include "opineq/positive_map.hpp"

namespace opineq {

/// Outcome of one inequality evaluation. For operator inequalities the margin
/// is lambda_min(RHS - LHS); for scalar ones it is RHS - LHS.
struct CheckResult {
  std::string check_name;
  nlohmann::json params = nlohmann::json::object();
  double margin = 0.0;
  bool holds = false;
  double tolerance = 0.0;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  /// Spectrum of RHS - LHS (operator checks) or {margin} (scalar checks).
  std::vector<double> difference_eigenvalues;

  /// margin / max(1, lhs_norm, rhs_norm).
  double normalized_margin() const;
};

CheckResult operator_check(std::string name, const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs, double tol, nlohmann::json params = {});
CheckResult scalar_check(std::string name, double lhs, double rhs, double tol,
                         nlohmann::json params = {});

/// How the second operand relates to the first and to the interval (m, M).
enum class Sandwich {
  kAbsolute,         // mI <= A, B <= MI
  kRelative,         // mA <= B <= MA
  kRelativeSquared,  // m^2 A <= B <= M^2 A
};

/// Hypothesis package of a theorem: operands, map, interval and optional
/// parameters. Every sandwich condition is verified with loewner_leq when
/// the corresponding operand is attached.
class CheckInstance {
 public:
  CheckInstance(HermitianMatrix a, PositiveMap phi, SpectralInterval iv,
                double tol = kDefaultLoewnerTolerance);

  /// Interval taken from spectral_bounds(a).
  static CheckInstance tight(HermitianMatrix a, PositiveMap phi);

  CheckInstance& with_b(HermitianMatrix b, Sandwich kind = Sandwich::kAbsolute);
  /// x lives in the map's output space.
  CheckInstance& with_state(VectorState x);
  CheckInstance& with_exponent(double p);
  CheckInstance& with_alpha(double alpha);
  CheckInstance& with_function(ScalarFunctionSpec f);

  const HermitianMatrix& a() const { return a_; }
  const PositiveMap& phi() const { return phi_; }
  const SpectralInterval& iv() const { return iv_; }
  Sandwich sandwich() const { return sandwich_; }
  double hypothesis_tolerance() const { return tol_; }

  bool has_b() const { return b_.has_value(); }
  bool has_state() const { return x_.has_value(); }
  bool has_exponent() const { return p_.has_value(); }
  bool has_alpha() const { return alpha_.has_value(); }
  bool has_function() const { return f_.has_value(); }

  /// These throw HypothesisError when the field is absent.
  const HermitianMatrix& b() const;
  const VectorState& state() const;
  double exponent() const;
  double alpha() const;
  const ScalarFunctionSpec& function() const;

 private:
  HermitianMatrix a_;
  PositiveMap phi_;
  SpectralInterval iv_;
  double tol_;
  Sandwich sandwich_ = Sandwich::kAbsolute;
  std::optional<HermitianMatrix> b_;
  std::optional<VectorState> x_;
  std::optional<double> p_;
  std::optional<double> alpha_;
  std::optional<ScalarFunctionSpec> f_;
};

using CheckPair = std::pair<CheckResult, CheckResult>;

// Each check takes the comparison tolerance `tol` (relative, see
// CheckResult) and reports rather than throws when the inequality fails.
// Preconditions (flags, missing operands, sandwich) throw HypothesisError.

/// f(Phi(A)) <= Phi(f(A)) for operator convex f.
CheckResult check_choi_davis(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);
/// Phi(A^{-1}) <= (M+m)^2/(4Mm) Phi(A)^{-1}.
CheckResult check_kantorovich(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);
/// Phi(A^2) <= (M+m)^2/(4Mm) Phi(A)^2.
CheckResult check_kantorovich_squared(const CheckInstance& inst,
                                      double tol = kDefaultLoewnerTolerance);
/// Phi(A^{-1}) # Phi(A) <= (M+m)/(2 sqrt(Mm)) I.
CheckResult check_kantorovich_sharp(const CheckInstance& inst,
                                    double tol = kDefaultLoewnerTolerance);
/// Phi(A^{-1}) # Phi(A) <= |(Phi(A)^{1/2} Phi(A^{-1}) Phi(A)^{1/2})^{1/2}| I
///                      <= (M+m)/(2 sqrt(Mm)) I.
/// The second result is the scalar link; its params carry the gap.
CheckPair check_refinement(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);
/// <Ax,x>^r <= <A^r x,x> for r >= 1 or r < 0. Uses the instance exponent as
/// r and requires phi to be the identity dimension-wise (x in A's space).
CheckResult check_power_inner_product(const CheckInstance& inst,
                                      double tol = kDefaultLoewnerTolerance);
/// Phi(A # B) <= Phi(A) # Phi(B).
CheckResult check_ando(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);
/// Phi(A sigma_f B) <= Phi(A) sigma_f Phi(B) for an operator mean f.
CheckResult check_ando_connection(const CheckInstance& inst,
                                  double tol = kDefaultLoewnerTolerance);
/// Phi(A) sigma_f Phi(B) <= Phi(A sigma_f B) for operator convex f > 0.
CheckResult check_reverse_ando_convex(const CheckInstance& inst,
                                      double tol = kDefaultLoewnerTolerance);
/// Phi(A) # Phi(B) <= (M+m)/(2 sqrt(mM)) Phi(A # B) given m^2 A <= B <= M^2 A.
CheckResult check_reverse_ando_sandwich(const HermitianMatrix& a, const HermitianMatrix& b,
                                        const PositiveMap& phi, const SpectralInterval& iv,
                                        double tol = kDefaultLoewnerTolerance);
/// The four equivalent Kantorovich forms (i)-(iv); (ii) needs a state.
std::vector<CheckResult> check_theorem2_all(const CheckInstance& inst,
                                            double tol = kDefaultLoewnerTolerance);
/// Phi(B A^{-1} B) <= (M+m)^2/(4Mm) Phi(B) Phi(A)^{-1} Phi(B) given mA <= B <= MA.
CheckResult check_reverse_choi_quadratic(const HermitianMatrix& a, const HermitianMatrix& b,
                                         const PositiveMap& phi, const SpectralInterval& iv,
                                         double tol = kDefaultLoewnerTolerance);
/// <Phi(f(A))x,x> <= beta + alpha f(<Phi(A)x,x>) with beta = mond_pecaric_beta.
CheckResult check_mond_pecaric(const CheckInstance& inst, double alpha,
                               double tol = kDefaultLoewnerTolerance);
/// Phi(A^p) <= K(p,m,M) Phi(A)^p for p >= 1 or p < 0.
CheckResult check_generalized_kantorovich_operator(const CheckInstance& inst, double p,
                                                   double tol = kDefaultLoewnerTolerance);
/// <Phi(A^p)x,x> <= K <Phi(A)x,x>^p <= K <Phi(A)^p x,x>, one result per link.
CheckPair check_eq5_improves_eq6(const CheckInstance& inst, double p,
                                 double tol = kDefaultLoewnerTolerance);
/// Phi(A^2)^{1/2} <= (M-m)^2/(4(M+m)) + Phi(A).
CheckResult check_additive_sqrt(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);
/// f^{-1}(Phi(f(A))) + f^{-1}(Phi(f(B))) bounded by alpha f^{-1}(Phi(f(A+B)))
/// (first) and by beta + f^{-1}(Phi(f(A+B))) (second).
CheckPair check_minkowski_general(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PositiveMap& phi, const SpectralInterval& iv,
                                  const ScalarFunctionSpec& f,
                                  double tol = kDefaultLoewnerTolerance);
/// Phi(A^p)^{1/p} + Phi(B^p)^{1/p} bounded by K_p^{1/p} Phi((A+B)^p)^{1/p}
/// and by beta_p + Phi((A+B)^p)^{1/p}, 1 <= p <= 2.
CheckPair check_power_minkowski(const HermitianMatrix& a, const HermitianMatrix& b,
                                const PositiveMap& phi, const SpectralInterval& iv, double p,
                                double tol = kDefaultLoewnerTolerance);
/// k-tuple form: the maps w_i Phi_i act on A_1 (+) ... (+) A_k; reduces to
/// check_power_minkowski at p = 2. Empty weights mean equal weights.
CheckPair check_tuple_minkowski(const std::vector<HermitianMatrix>& as,
                                const std::vector<HermitianMatrix>& bs,
                                const std::vector<PositiveMap>& phis, const SpectralInterval& iv,
                                std::vector<double> weights = {},
                                double tol = kDefaultLoewnerTolerance);

/// Phi(A^{-1})^2 <= (M+m)^2/(4Mm) Phi(A)^{-1/2} Phi(A^{-1}) Phi(A)^{-1/2}.
/// Not a theorem: registered as expected to fail.
CheckResult check_eq11_candidate(const CheckInstance& inst, double tol = kDefaultLoewnerTolerance);

struct CounterexampleT {
  HermitianMatrix t;
  double lambda_min;
  double lambda_max;
  bool psd;
};

/// T(x, alpha, beta) = (1+x)^2/(4x) Phi(A)^{-1/2} Phi(A^{-1}) Phi(A)^{-1/2} - Phi(A^{-1})^2
/// with A = diag(x, 1) and the rotation mixture for (alpha, beta).
CounterexampleT counterexample_T(double x, double alpha, double beta,
                                 double tol = kDefaultLoewnerTolerance);

/// The instance (A = diag(x,1), rotation mixture, tight interval) of the
/// three-parameter family above.
CheckInstance counterexample_instance(double x, double alpha, double beta);

}  // namespace opineq
