#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <vector>

#include "opineq/functions.hpp"

namespace opineq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Deviation from Hermitian symmetry accepted by the checked constructor.
inline constexpr double kHermitianTolerance = 1e-12;
/// Relative tolerance for every Loewner comparison unless overridden.
inline constexpr double kDefaultLoewnerTolerance = 1e-9;
/// Functions on (0, inf) reject spectra with lambda_min <= this * max(1, |A|).
inline constexpr double kPositivityThreshold = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/// Dense complex Hermitian matrix, stored exactly symmetric.
class HermitianMatrix {
 public:
  /// Throws DimensionError for non-square or empty input and DomainError when
  /// any |a_ij - conj(a_ji)| exceeds kHermitianTolerance. The stored value is
  /// (X + X*)/2.
  explicit HermitianMatrix(const CMatrix& entries);

  /// (X + X*)/2 without the symmetry check. For results of expressions that
  /// are Hermitian in exact arithmetic, such as S X S*.
  static HermitianMatrix hermitian_part(const CMatrix& entries);
  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix scalar(Index n, double value);
  static HermitianMatrix diagonal(const std::vector<double>& values);
  static HermitianMatrix real(std::initializer_list<std::initializer_list<double>> rows);

  Index dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  cplx operator()(Index i, Index j) const { return entries_(i, j); }

  double frobenius_norm() const { return entries_.norm(); }
  double trace() const { return entries_.trace().real(); }

  HermitianMatrix operator-() const;
  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double s);

 private:
  struct Unchecked {};
  HermitianMatrix(CMatrix entries, Unchecked);

  CMatrix entries_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);
HermitianMatrix operator*(HermitianMatrix a, double s);

/// S X S* for any (possibly rectangular) S.
HermitianMatrix congruence(const CMatrix& s, const HermitianMatrix& x);
/// S X S for Hermitian S.
HermitianMatrix sandwich(const HermitianMatrix& s, const HermitianMatrix& x);
HermitianMatrix square(const HermitianMatrix& a);
/// Block-diagonal assembly A_1 (+) ... (+) A_k.
HermitianMatrix direct_sum(const std::vector<HermitianMatrix>& blocks);

/// Spectral decomposition; eigenvalues ascending, eigenvectors as columns.
struct EigenDecomposition {
  Eigen::VectorXd values;
  CMatrix vectors;

  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
  /// U diag(g(lambda_i)) U*.
  template <class F>
  HermitianMatrix map(F&& g) const {
    Eigen::VectorXd mapped(values.size());
    for (Index i = 0; i < values.size(); ++i) mapped(i) = g(values(i));
    return HermitianMatrix::hermitian_part(vectors * mapped.asDiagonal() * vectors.adjoint());
  }
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm drops
/// below 1e-13 |A|_F; throws ConvergenceError after kMaxJacobiSweeps sweeps.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);
Eigen::VectorXd eigenvalues(const HermitianMatrix& a);
double lambda_min(const HermitianMatrix& a);
double lambda_max(const HermitianMatrix& a);

/// The interval [lower, upper], 0 < lower <= upper, housing mI <= A <= MI.
class SpectralInterval {
 public:
  SpectralInterval(double lower, double upper);
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool degenerate() const { return lower_ == upper_; }
  bool operator==(const SpectralInterval&) const = default;

 private:
  double lower_;
  double upper_;
};

HermitianMatrix matrix_function(const HermitianMatrix& a, const ScalarFunctionSpec& f);
HermitianMatrix matrix_function(const EigenDecomposition& eig, const ScalarFunctionSpec& f);

/// A^p. Any real p for positive definite A; otherwise p must be a nonnegative
/// integer. power(A, 0) = I and power(A, 1) = A exactly.
HermitianMatrix power(const HermitianMatrix& a, double p);
HermitianMatrix power(const EigenDecomposition& eig, double p);
HermitianMatrix inverse(const HermitianMatrix& a);
HermitianMatrix sqrt(const HermitianMatrix& a);

struct LoewnerComparison {
  bool holds;
  double margin;  // lambda_min(B - A)
};

/// Decides A <= B: holds iff lambda_min(B - A) >= -tol * max(1, |A|, |B|).
LoewnerComparison loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                              double tol = kDefaultLoewnerTolerance);

/// max |lambda_i|.
double operator_norm(const HermitianMatrix& a);

/// (lambda_min, lambda_max); throws DomainError unless lambda_min > 0.
SpectralInterval spectral_bounds(const HermitianMatrix& a);

bool is_positive_definite(const HermitianMatrix& a);

}  // namespace opineq
