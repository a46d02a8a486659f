#pragma once

#include "opineq/functions.hpp"
#include "opineq/hermitian.hpp"

namespace opineq {

/// Representing function of a connection A sigma_f B. f need not satisfy
/// f(1) = 1; `normalized()` reports whether the connection is a mean.
class ConnectionSpec {
 public:
  explicit ConnectionSpec(ScalarFunctionSpec f) : f_(std::move(f)) {}

  const ScalarFunctionSpec& function() const { return f_; }
  bool normalized() const { return f_.normalized(); }

 private:
  ScalarFunctionSpec f_;
};

/// A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}. Both arguments must be
/// positive definite.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b);

/// A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}. A positive definite; B Hermitian
/// with the inner congruence spectrally inside f's domain.
HermitianMatrix connection(const HermitianMatrix& a, const HermitianMatrix& b,
                           const ConnectionSpec& c);

/// |X A^{-1} X - B|_F / |B|_F with X = A # B.
double riccati_residual(const HermitianMatrix& a, const HermitianMatrix& b);

/// sqrt(ab) for a, b > 0.
double scalar_sharp(double a, double b);

}  // namespace opineq
