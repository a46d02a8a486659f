#include "opineq/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opineq/error.hpp"

namespace opineq {

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(CMatrix entries, Unchecked) : entries_(std::move(entries)) {}

HermitianMatrix::HermitianMatrix(const CMatrix& entries) {
  if (entries.rows() != entries.cols())
    throw DimensionError("Hermitian matrix must be square, got " +
                         std::to_string(entries.rows()) + "x" + std::to_string(entries.cols()));
  if (entries.rows() < 1) throw DimensionError("Hermitian matrix must have n >= 1");
  const Index n = entries.rows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const double dev = std::abs(entries(i, j) - std::conj(entries(j, i)));
      if (!(dev <= kHermitianTolerance))
        throw DomainError("matrix is not Hermitian: |a(" + std::to_string(i) + "," +
                          std::to_string(j) + ") - conj(a(j,i))| = " + std::to_string(dev));
    }
  }
  entries_ = (entries + entries.adjoint()) / 2.0;
}

HermitianMatrix HermitianMatrix::hermitian_part(const CMatrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw DimensionError("Hermitian part requires a non-empty square matrix");
  return HermitianMatrix((entries + entries.adjoint()) / 2.0, Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  if (n < 1) throw DimensionError("dimension must be >= 1");
  return HermitianMatrix(CMatrix::Identity(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(Index n) {
  if (n < 1) throw DimensionError("dimension must be >= 1");
  return HermitianMatrix(CMatrix::Zero(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::scalar(Index n, double value) {
  auto out = identity(n);
  out *= value;
  return out;
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& values) {
  const auto n = static_cast<Index>(values.size());
  if (n < 1) throw DimensionError("dimension must be >= 1");
  CMatrix d = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
  return HermitianMatrix(std::move(d), Unchecked{});
}

HermitianMatrix HermitianMatrix::real(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  CMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw DimensionError("ragged matrix literal");
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator-() const {
  return HermitianMatrix(-entries_, Unchecked{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in addition");
  entries_ += other.entries_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in subtraction");
  entries_ -= other.entries_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  entries_ *= s;
  return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

HermitianMatrix congruence(const CMatrix& s, const HermitianMatrix& x) {
  if (s.cols() != x.dim()) throw DimensionError("dimension mismatch in congruence");
  return HermitianMatrix::hermitian_part(s * x.entries() * s.adjoint());
}

HermitianMatrix sandwich(const HermitianMatrix& s, const HermitianMatrix& x) {
  if (s.dim() != x.dim()) throw DimensionError("dimension mismatch in sandwich product");
  return HermitianMatrix::hermitian_part(s.entries() * x.entries() * s.entries());
}

HermitianMatrix square(const HermitianMatrix& a) {
  return HermitianMatrix::hermitian_part(a.entries() * a.entries());
}

HermitianMatrix direct_sum(const std::vector<HermitianMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("direct sum of zero blocks");
  Index n = 0;
  for (const auto& b : blocks) n += b.dim();
  CMatrix out = CMatrix::Zero(n, n);
  Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.dim(), b.dim()) = b.entries();
    offset += b.dim();
  }
  return HermitianMatrix::hermitian_part(out);
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary G = D R D*, where D = diag(1, conj(e))
// strips the phase e of a(p,q) and R is the real Jacobi rotation.
void rotate(CMatrix& a, CMatrix& v, Index p, Index q) {
  const cplx apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx e = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx gpq = s * e;
  const cplx gqp = -s * std::conj(e);

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {  // A <- A G
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp + gqp * akq;
    a(k, q) = gpq * akp + c * akq;
  }
  for (Index k = 0; k < n; ++k) {  // A <- G* A
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + c * aqk;
  }
  for (Index k = 0; k < n; ++k) {  // V <- V G
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp + gqp * vkq;
    v(k, q) = gpq * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& input) {
  const Index n = input.dim();
  CMatrix a = input.entries();
  CMatrix v = CMatrix::Identity(n, n);
  const double scale = a.norm();
  const double threshold = 1e-13 * scale;

  bool converged = scale == 0.0 || n == 1;
  for (int sweep = 0; !converged && sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) {
      converged = true;
      break;
    }
    for (Index p = 0; p < n - 1; ++p)
      for (Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) < threshold) converged = true;
  if (!converged)
    throw ConvergenceError("Jacobi eigensolver did not converge within " +
                           std::to_string(kMaxJacobiSweeps) + " sweeps");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{Eigen::VectorXd(n), CMatrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

Eigen::VectorXd eigenvalues(const HermitianMatrix& a) { return eig_hermitian(a).values; }
double lambda_min(const HermitianMatrix& a) { return eig_hermitian(a).min(); }
double lambda_max(const HermitianMatrix& a) { return eig_hermitian(a).max(); }

// ---------------------------------------------------------------------------
// Functional calculus

SpectralInterval::SpectralInterval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!(lower > 0.0) || !(lower <= upper) || !std::isfinite(upper))
    throw DomainError("spectral interval requires 0 < m <= M, got (" + std::to_string(lower) +
                      ", " + std::to_string(upper) + ")");
}

namespace {

double spectral_radius(const EigenDecomposition& eig) {
  return std::max(std::abs(eig.min()), std::abs(eig.max()));
}

void require_positive(const EigenDecomposition& eig, const std::string& what) {
  const double floor = kPositivityThreshold * std::max(1.0, spectral_radius(eig));
  if (!(eig.min() > floor))
    throw DomainError(what + " requires a positive definite argument, lambda_min = " +
                      std::to_string(eig.min()));
}

}  // namespace

HermitianMatrix matrix_function(const EigenDecomposition& eig, const ScalarFunctionSpec& f) {
  if (f.requires_positive()) require_positive(eig, f.name());
  return eig.map([&](double t) {
    const double y = f(t);
    if (!std::isfinite(y))
      throw DomainError(f.name() + " is not finite at eigenvalue " + std::to_string(t));
    return y;
  });
}

HermitianMatrix matrix_function(const HermitianMatrix& a, const ScalarFunctionSpec& f) {
  return matrix_function(eig_hermitian(a), f);
}

namespace {

bool is_nonnegative_integer(double p) { return p >= 0 && std::floor(p) == p; }

}  // namespace

HermitianMatrix power(const EigenDecomposition& eig, double p) {
  if (!is_nonnegative_integer(p)) require_positive(eig, "non-integer or negative power");
  if (p == 0.0) return HermitianMatrix::identity(eig.values.size());
  if (p == 1.0) return eig.map([](double t) { return t; });
  if (p == -1.0) return eig.map([](double t) { return 1.0 / t; });
  if (p == 0.5) return eig.map([](double t) { return std::sqrt(t); });
  if (p == -0.5) return eig.map([](double t) { return 1.0 / std::sqrt(t); });
  return eig.map([p](double t) { return std::pow(t, p); });
}

HermitianMatrix power(const HermitianMatrix& a, double p) {
  if (p == 0.0) return HermitianMatrix::identity(a.dim());
  if (p == 1.0) return a;
  if (p == 2.0) return square(a);
  return power(eig_hermitian(a), p);
}

HermitianMatrix inverse(const HermitianMatrix& a) { return power(a, -1.0); }
HermitianMatrix sqrt(const HermitianMatrix& a) { return power(a, 0.5); }

// ---------------------------------------------------------------------------
// Order and norms

double operator_norm(const HermitianMatrix& a) { return spectral_radius(eig_hermitian(a)); }

LoewnerComparison loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in Loewner comparison");
  if (!(tol >= 0.0)) throw DomainError("Loewner tolerance must be >= 0");
  const double margin = lambda_min(b - a);
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  return {margin >= -tol * scale, margin};
}

SpectralInterval spectral_bounds(const HermitianMatrix& a) {
  const auto eig = eig_hermitian(a);
  if (!(eig.min() > 0.0))
    throw DomainError("spectral bounds require a positive definite matrix, lambda_min = " +
                      std::to_string(eig.min()));
  return {eig.min(), eig.max()};
}

bool is_positive_definite(const HermitianMatrix& a) {
  const auto eig = eig_hermitian(a);
  return eig.min() > kPositivityThreshold * std::max(1.0, spectral_radius(eig));
}

}  // namespace opineq
