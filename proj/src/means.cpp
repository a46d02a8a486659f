#include "opineq/means.hpp"

#include <cmath>

#include "opineq/error.hpp"

namespace opineq {

namespace {

struct RootPair {
  HermitianMatrix root;
  HermitianMatrix inverse_root;
};

RootPair roots(const HermitianMatrix& a) {
  const auto eig = eig_hermitian(a);
  return {power(eig, 0.5), power(eig, -0.5)};
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("operands of a connection differ in dimension");
}

}  // namespace

HermitianMatrix connection(const HermitianMatrix& a, const HermitianMatrix& b,
                           const ConnectionSpec& c) {
  require_same_dim(a, b);
  const auto [root, inverse_root] = roots(a);
  const auto inner = sandwich(inverse_root, b);
  return sandwich(root, matrix_function(inner, c.function()));
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b);
  if (!is_positive_definite(b))
    throw DomainError("geometric mean requires positive definite operands");
  if (a.dim() == 1) {
    const double value = scalar_sharp(a(0, 0).real(), b(0, 0).real());
    return HermitianMatrix::diagonal({value});
  }
  const auto [root, inverse_root] = roots(a);
  return sandwich(root, sqrt(sandwich(inverse_root, b)));
}

double riccati_residual(const HermitianMatrix& a, const HermitianMatrix& b) {
  const auto x = geometric_mean(a, b);
  const auto lhs = sandwich(x, inverse(a));
  return (lhs - b).frobenius_norm() / b.frobenius_norm();
}

double scalar_sharp(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("scalar sharp requires positive arguments");
  return std::sqrt(a * b);
}

}  // namespace opineq
