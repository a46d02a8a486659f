#include "opineq/checks.hpp"

#include <algorithm>
#include <cmath>

#include "opineq/constants.hpp"
#include "opineq/error.hpp"
#include "opineq/means.hpp"

namespace opineq {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Results

double CheckResult::normalized_margin() const {
  return margin / std::max({1.0, lhs_norm, rhs_norm});
}

CheckResult operator_check(std::string name, const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs, double tol, json params) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("sides of " + name + " differ in dimension");
  const auto eig = eig_hermitian(rhs - lhs);
  CheckResult r;
  r.check_name = std::move(name);
  r.params = params.is_null() ? json::object() : std::move(params);
  r.margin = eig.min();
  r.tolerance = tol;
  r.lhs_norm = operator_norm(lhs);
  r.rhs_norm = operator_norm(rhs);
  r.holds = r.margin >= -tol * std::max({1.0, r.lhs_norm, r.rhs_norm});
  r.difference_eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());
  return r;
}

CheckResult scalar_check(std::string name, double lhs, double rhs, double tol, json params) {
  CheckResult r;
  r.check_name = std::move(name);
  r.params = params.is_null() ? json::object() : std::move(params);
  r.margin = rhs - lhs;
  r.tolerance = tol;
  r.lhs_norm = std::abs(lhs);
  r.rhs_norm = std::abs(rhs);
  r.holds = r.margin >= -tol * std::max({1.0, r.lhs_norm, r.rhs_norm});
  r.difference_eigenvalues = {r.margin};
  return r;
}

// ---------------------------------------------------------------------------
// Instances

namespace {

void require_leq(const HermitianMatrix& lo, const HermitianMatrix& hi, double tol,
                 const char* what) {
  const auto cmp = loewner_leq(lo, hi, tol);
  if (!cmp.holds)
    throw HypothesisError(std::string("sandwich hypothesis violated: ") + what +
                          " (margin " + std::to_string(cmp.margin) + ")");
}

void require_absolute_sandwich(const HermitianMatrix& a, const SpectralInterval& iv, double tol) {
  const Index n = a.dim();
  require_leq(HermitianMatrix::scalar(n, iv.lower()), a, tol, "mI <= A");
  require_leq(a, HermitianMatrix::scalar(n, iv.upper()), tol, "A <= MI");
}

void require_relative_sandwich(const HermitianMatrix& a, const HermitianMatrix& b, double lo,
                               double hi, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("operands differ in dimension");
  require_leq(lo * a, b, tol, "lower relative bound on B");
  require_leq(b, hi * a, tol, "upper relative bound on B");
}

}  // namespace

CheckInstance::CheckInstance(HermitianMatrix a, PositiveMap phi, SpectralInterval iv, double tol)
    : a_(std::move(a)), phi_(std::move(phi)), iv_(iv), tol_(tol) {
  if (a_.dim() != phi_.input_dim())
    throw DimensionError("operand dimension differs from the map's input dimension");
  require_absolute_sandwich(a_, iv_, tol_);
}

CheckInstance CheckInstance::tight(HermitianMatrix a, PositiveMap phi) {
  const auto iv = spectral_bounds(a);
  return {std::move(a), std::move(phi), iv};
}

CheckInstance& CheckInstance::with_b(HermitianMatrix b, Sandwich kind) {
  if (b.dim() != a_.dim()) throw DimensionError("B must have the dimension of A");
  switch (kind) {
    case Sandwich::kAbsolute:
      require_absolute_sandwich(b, iv_, tol_);
      break;
    case Sandwich::kRelative:
      require_relative_sandwich(a_, b, iv_.lower(), iv_.upper(), tol_);
      break;
    case Sandwich::kRelativeSquared:
      require_relative_sandwich(a_, b, iv_.lower() * iv_.lower(), iv_.upper() * iv_.upper(), tol_);
      break;
  }
  b_ = std::move(b);
  sandwich_ = kind;
  return *this;
}

CheckInstance& CheckInstance::with_state(VectorState x) {
  if (x.dim() != phi_.output_dim())
    throw DimensionError("state dimension differs from the map's output dimension");
  x_ = std::move(x);
  return *this;
}

CheckInstance& CheckInstance::with_exponent(double p) {
  p_ = p;
  return *this;
}

CheckInstance& CheckInstance::with_alpha(double alpha) {
  alpha_ = alpha;
  return *this;
}

CheckInstance& CheckInstance::with_function(ScalarFunctionSpec f) {
  f_ = std::move(f);
  return *this;
}

const HermitianMatrix& CheckInstance::b() const {
  if (!b_) throw HypothesisError("instance has no second operand");
  return *b_;
}

const VectorState& CheckInstance::state() const {
  if (!x_) throw HypothesisError("instance has no vector state");
  return *x_;
}

double CheckInstance::exponent() const {
  if (!p_) throw HypothesisError("instance has no exponent");
  return *p_;
}

double CheckInstance::alpha() const {
  if (!alpha_) throw HypothesisError("instance has no alpha");
  return *alpha_;
}

const ScalarFunctionSpec& CheckInstance::function() const {
  if (!f_) throw HypothesisError("instance has no function");
  return *f_;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

json base_params(const CheckInstance& inst) {
  json p = {{"dim", inst.a().dim()},
            {"output_dim", inst.phi().output_dim()},
            {"map", std::string(inst.phi().kind())},
            {"m", inst.iv().lower()},
            {"M", inst.iv().upper()}};
  if (inst.has_function()) p["function"] = inst.function().name();
  return p;
}

json pair_params(const HermitianMatrix& a, const PositiveMap& phi, const SpectralInterval& iv) {
  return {{"dim", a.dim()},
          {"output_dim", phi.output_dim()},
          {"map", std::string(phi.kind())},
          {"m", iv.lower()},
          {"M", iv.upper()}};
}

double sharp_constant(const SpectralInterval& iv) {
  return (iv.upper() + iv.lower()) / (2.0 * std::sqrt(iv.upper() * iv.lower()));
}

void require_flag(bool flag, const ScalarFunctionSpec& f, const char* what) {
  if (!flag) throw HypothesisError(f.name() + " is not " + what + " in the catalog");
}

void require_dim(const HermitianMatrix& a, const PositiveMap& phi) {
  if (a.dim() != phi.input_dim())
    throw DimensionError("operand dimension differs from the map's input dimension");
}

void require_exponent_outside_unit(double p, const char* what) {
  if (p > 0.0 && p < 1.0)
    throw HypothesisError(std::string(what) + " requires an exponent p >= 1 or p < 0");
}

}  // namespace

CheckResult check_choi_davis(const CheckInstance& inst, double tol) {
  const auto& f = inst.function();
  require_flag(f.flags().operator_convex, f, "operator convex");
  const auto& phi = inst.phi();
  const auto lhs = matrix_function(phi(inst.a()), f);
  const auto rhs = phi(matrix_function(inst.a(), f));
  return operator_check("choi_davis", lhs, rhs, tol, base_params(inst));
}

CheckResult check_kantorovich(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double k = kantorovich_constant(inst.iv());
  const auto lhs = phi(inverse(inst.a()));
  const auto rhs = k * inverse(phi(inst.a()));
  auto params = base_params(inst);
  params["constant"] = k;
  return operator_check("kantorovich", lhs, rhs, tol, std::move(params));
}

CheckResult check_kantorovich_squared(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double k = kantorovich_constant(inst.iv());
  const auto lhs = phi(square(inst.a()));
  const auto rhs = k * square(phi(inst.a()));
  auto params = base_params(inst);
  params["constant"] = k;
  return operator_check("kantorovich_squared", lhs, rhs, tol, std::move(params));
}

CheckResult check_kantorovich_sharp(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double c = sharp_constant(inst.iv());
  const auto lhs = geometric_mean(phi(inverse(inst.a())), phi(inst.a()));
  const auto rhs = HermitianMatrix::scalar(lhs.dim(), c);
  auto params = base_params(inst);
  params["constant"] = c;
  return operator_check("kantorovich_sharp", lhs, rhs, tol, std::move(params));
}

CheckPair check_refinement(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const auto image = phi(inst.a());
  const auto image_inv = phi(inverse(inst.a()));
  const auto lhs = geometric_mean(image_inv, image);
  const double middle = operator_norm(sqrt(sandwich(sqrt(image), image_inv)));
  const double bound = sharp_constant(inst.iv());
  auto params = base_params(inst);
  params["middle"] = middle;
  params["constant"] = bound;
  params["gap"] = bound - middle;
  auto left = operator_check("refinement.left", lhs, HermitianMatrix::scalar(lhs.dim(), middle),
                             tol, params);
  auto right = scalar_check("refinement.right", middle, bound, tol, std::move(params));
  return {std::move(left), std::move(right)};
}

CheckResult check_power_inner_product(const CheckInstance& inst, double tol) {
  const double r = inst.exponent();
  require_exponent_outside_unit(r, "power inner product");
  const auto& x = inst.state();
  if (x.dim() != inst.a().dim())
    throw DimensionError("power inner product needs the state in the operand's space");
  const double lhs = std::pow(vector_state_value(x, inst.a()), r);
  const double rhs = vector_state_value(x, power(inst.a(), r));
  auto params = base_params(inst);
  params["r"] = r;
  return scalar_check("power_inner_product", lhs, rhs, tol, std::move(params));
}

CheckResult check_ando(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const auto lhs = phi(geometric_mean(inst.a(), inst.b()));
  const auto rhs = geometric_mean(phi(inst.a()), phi(inst.b()));
  return operator_check("ando", lhs, rhs, tol, base_params(inst));
}

CheckResult check_ando_connection(const CheckInstance& inst, double tol) {
  const auto& f = inst.function();
  require_flag(f.flags().operator_monotone_increasing, f, "operator monotone");
  if (!f.normalized()) throw HypothesisError(f.name() + " is not normalized (f(1) != 1)");
  const ConnectionSpec c(f);
  const auto& phi = inst.phi();
  const auto lhs = phi(connection(inst.a(), inst.b(), c));
  const auto rhs = connection(phi(inst.a()), phi(inst.b()), c);
  return operator_check("ando_connection", lhs, rhs, tol, base_params(inst));
}

CheckResult check_reverse_ando_convex(const CheckInstance& inst, double tol) {
  const auto& f = inst.function();
  require_flag(f.flags().operator_convex, f, "operator convex");
  for (double t : {inst.iv().lower(), 1.0, inst.iv().upper()})
    if (!(f(t) > 0.0)) throw HypothesisError(f.name() + " must be positive on (0, inf)");
  const ConnectionSpec c(f);
  const auto& phi = inst.phi();
  const auto lhs = connection(phi(inst.a()), phi(inst.b()), c);
  const auto rhs = phi(connection(inst.a(), inst.b(), c));
  return operator_check("reverse_ando_convex", lhs, rhs, tol, base_params(inst));
}

CheckResult check_reverse_ando_sandwich(const HermitianMatrix& a, const HermitianMatrix& b,
                                        const PositiveMap& phi, const SpectralInterval& iv,
                                        double tol) {
  require_dim(a, phi);
  require_relative_sandwich(a, b, iv.lower() * iv.lower(), iv.upper() * iv.upper(),
                            kDefaultLoewnerTolerance);
  const double c = sharp_constant(iv);
  const auto lhs = geometric_mean(phi(a), phi(b));
  const auto rhs = c * phi(geometric_mean(a, b));
  auto params = pair_params(a, phi, iv);
  params["constant"] = c;
  return operator_check("reverse_ando_sandwich", lhs, rhs, tol, std::move(params));
}

std::vector<CheckResult> check_theorem2_all(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double k = kantorovich_constant(inst.iv());
  const double c = sharp_constant(inst.iv());
  const auto image = phi(inst.a());
  const auto image_inv = phi(inverse(inst.a()));
  const auto params = base_params(inst);

  std::vector<CheckResult> out;
  out.push_back(operator_check("theorem2.i", image_inv, k * inverse(image), tol, params));
  {
    const auto& x = inst.state();
    const double lhs = vector_state_value(x, image_inv);
    const double rhs = k / vector_state_value(x, image);
    out.push_back(scalar_check("theorem2.ii", lhs, rhs, tol, params));
  }
  const auto sharp = geometric_mean(image_inv, image);
  out.push_back(operator_check("theorem2.iii", sharp, HermitianMatrix::scalar(sharp.dim(), c), tol,
                               params));
  out.push_back(
      operator_check("theorem2.iv", phi(square(inst.a())), k * square(image), tol, params));
  return out;
}

CheckResult check_reverse_choi_quadratic(const HermitianMatrix& a, const HermitianMatrix& b,
                                         const PositiveMap& phi, const SpectralInterval& iv,
                                         double tol) {
  require_dim(a, phi);
  require_relative_sandwich(a, b, iv.lower(), iv.upper(), kDefaultLoewnerTolerance);
  const double k = kantorovich_constant(iv);
  const auto lhs = phi(sandwich(b, inverse(a)));
  const auto rhs = k * sandwich(phi(b), inverse(phi(a)));
  auto params = pair_params(a, phi, iv);
  params["constant"] = k;
  return operator_check("reverse_choi_quadratic", lhs, rhs, tol, std::move(params));
}

CheckResult check_mond_pecaric(const CheckInstance& inst, double alpha, double tol) {
  const auto& f = inst.function();
  require_flag(f.flags().convex, f, "convex");
  const auto& x = inst.state();
  const double beta = mond_pecaric_beta(f, inst.iv(), alpha);
  const auto& phi = inst.phi();
  const double lhs = vector_state_value(x, phi(matrix_function(inst.a(), f)));
  const double rhs = beta + alpha * f(vector_state_value(x, phi(inst.a())));
  auto params = base_params(inst);
  params["alpha"] = alpha;
  params["beta"] = beta;
  return scalar_check("mond_pecaric", lhs, rhs, tol, std::move(params));
}

CheckResult check_generalized_kantorovich_operator(const CheckInstance& inst, double p,
                                                   double tol) {
  require_exponent_outside_unit(p, "generalized Kantorovich");
  const auto& phi = inst.phi();
  const double k = generalized_kantorovich(p, inst.iv());
  const auto lhs = phi(power(inst.a(), p));
  const auto rhs = k * power(phi(inst.a()), p);
  auto params = base_params(inst);
  params["p"] = p;
  params["constant"] = k;
  return operator_check("generalized_kantorovich", lhs, rhs, tol, std::move(params));
}

CheckPair check_eq5_improves_eq6(const CheckInstance& inst, double p, double tol) {
  require_exponent_outside_unit(p, "generalized Kantorovich");
  const auto& phi = inst.phi();
  const auto& x = inst.state();
  const double k = generalized_kantorovich(p, inst.iv());
  const auto image = phi(inst.a());
  const double left = vector_state_value(x, phi(power(inst.a(), p)));
  const double middle = k * std::pow(vector_state_value(x, image), p);
  const double right = k * vector_state_value(x, power(image, p));
  auto params = base_params(inst);
  params["p"] = p;
  params["constant"] = k;
  return {scalar_check("eq5_improves_eq6.left", left, middle, tol, params),
          scalar_check("eq5_improves_eq6.right", middle, right, tol, params)};
}

CheckResult check_additive_sqrt(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double m = inst.iv().lower();
  const double big_m = inst.iv().upper();
  const double c = (big_m - m) * (big_m - m) / (4.0 * (big_m + m));
  const auto lhs = sqrt(phi(square(inst.a())));
  const auto image = phi(inst.a());
  const auto rhs = HermitianMatrix::scalar(image.dim(), c) + image;
  auto params = base_params(inst);
  params["constant"] = c;
  return operator_check("additive_sqrt", lhs, rhs, tol, std::move(params));
}

CheckPair check_minkowski_general(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const PositiveMap& phi, const SpectralInterval& iv,
                                  const ScalarFunctionSpec& f, double tol) {
  require_dim(a, phi);
  require_flag(f.flags().one_to_one, f, "one-to-one");
  require_flag(f.flags().operator_convex, f, "operator convex");
  require_flag(f.has_inverse() && f.inverse().flags().operator_monotone_increasing, f,
               "invertible with an operator monotone inverse");
  require_absolute_sandwich(a, iv, kDefaultLoewnerTolerance);
  require_absolute_sandwich(b, iv, kDefaultLoewnerTolerance);

  const auto& g = f.inverse();
  const double alpha = alpha_constant(f, iv);
  const auto image = image_interval(f, iv);
  const double beta = 2.0 * beta0_constant(g, image);

  const auto transported = [&](const HermitianMatrix& x) {
    return matrix_function(phi(matrix_function(x, f)), g);
  };
  const auto lhs = transported(a) + transported(b);
  const auto base = transported(a + b);
  auto params = pair_params(a, phi, iv);
  params["function"] = f.name();
  params["alpha"] = alpha;
  params["beta"] = beta;
  return {operator_check("minkowski_general.multiplicative", lhs, alpha * base, tol, params),
          operator_check("minkowski_general.additive", lhs,
                         HermitianMatrix::scalar(base.dim(), beta) + base, tol, params)};
}

CheckPair check_power_minkowski(const HermitianMatrix& a, const HermitianMatrix& b,
                                const PositiveMap& phi, const SpectralInterval& iv, double p,
                                double tol) {
  require_dim(a, phi);
  if (!(p >= 1.0 && p <= 2.0)) throw HypothesisError("power Minkowski requires 1 <= p <= 2");
  require_absolute_sandwich(a, iv, kDefaultLoewnerTolerance);
  require_absolute_sandwich(b, iv, kDefaultLoewnerTolerance);

  const double k = generalized_kantorovich(p, iv);
  const double factor = std::pow(k, 1.0 / p);
  const double beta = beta_p_constant(p, iv);
  const auto transported = [&](const HermitianMatrix& x) {
    return power(phi(power(x, p)), 1.0 / p);
  };
  const auto lhs = transported(a) + transported(b);
  const auto base = transported(a + b);
  auto params = pair_params(a, phi, iv);
  params["p"] = p;
  params["factor"] = factor;
  params["beta"] = beta;
  return {operator_check("power_minkowski.multiplicative", lhs, factor * base, tol, params),
          operator_check("power_minkowski.additive", lhs,
                         HermitianMatrix::scalar(base.dim(), beta) + base, tol, params)};
}

CheckPair check_tuple_minkowski(const std::vector<HermitianMatrix>& as,
                                const std::vector<HermitianMatrix>& bs,
                                const std::vector<PositiveMap>& phis, const SpectralInterval& iv,
                                std::vector<double> weights, double tol) {
  const std::size_t k = as.size();
  if (k == 0 || bs.size() != k || phis.size() != k)
    throw DimensionError("tuple Minkowski needs k >= 1 matching operands and maps");
  if (weights.empty()) weights.assign(k, 1.0 / static_cast<double>(k));
  const auto phi = PositiveMap::direct_sum(phis, std::move(weights));
  auto [mult, add] = check_power_minkowski(direct_sum(as), direct_sum(bs), phi, iv, 2.0, tol);
  mult.check_name = "tuple_minkowski.multiplicative";
  add.check_name = "tuple_minkowski.additive";
  mult.params["k"] = k;
  add.params["k"] = k;
  return {std::move(mult), std::move(add)};
}

CheckResult check_eq11_candidate(const CheckInstance& inst, double tol) {
  const auto& phi = inst.phi();
  const double k = kantorovich_constant(inst.iv());
  const auto image = phi(inst.a());
  const auto image_inv = phi(inverse(inst.a()));
  const auto lhs = square(image_inv);
  const auto rhs = k * sandwich(power(image, -0.5), image_inv);
  auto params = base_params(inst);
  params["constant"] = k;
  return operator_check("eq11_candidate", lhs, rhs, tol, std::move(params));
}

CheckInstance counterexample_instance(double x, double alpha, double beta) {
  if (!(x > 0.0)) throw DomainError("counterexample parameter x must be positive");
  return {HermitianMatrix::diagonal({x, 1.0}), make_rotation_mixture(alpha, beta),
          SpectralInterval(std::min(x, 1.0), std::max(x, 1.0))};
}

CounterexampleT counterexample_T(double x, double alpha, double beta, double tol) {
  const auto inst = counterexample_instance(x, alpha, beta);
  const auto& phi = inst.phi();
  const double k = (1.0 + x) * (1.0 + x) / (4.0 * x);
  const auto image = phi(inst.a());
  const auto image_inv = phi(inverse(inst.a()));
  auto t = k * sandwich(power(image, -0.5), image_inv) - square(image_inv);
  const auto eig = eig_hermitian(t);
  const bool psd = eig.min() >= -tol * std::max(1.0, operator_norm(t));
  return {std::move(t), eig.min(), eig.max(), psd};
}

}  // namespace opineq
