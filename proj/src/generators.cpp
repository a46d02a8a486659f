#include "opineq/generators.hpp"

#include <cmath>
#include <numeric>

#include "opineq/error.hpp"

namespace opineq {

CMatrix random_unitary(Index dim, RandomStream& rng) {
  if (dim < 1) throw DimensionError("unitary dimension must be >= 1");
  CMatrix z(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : cplx(1.0);
  }
  return q;
}

namespace {

std::vector<double> spectrum_in(Index dim, const SpectralInterval& iv, RandomStream& rng) {
  std::vector<double> values(static_cast<std::size_t>(dim));
  if (dim == 1) {
    values[0] = rng.uniform(iv.lower(), iv.upper());
    return values;
  }
  values[0] = iv.lower();
  values[1] = iv.upper();
  for (std::size_t i = 2; i < values.size(); ++i) values[i] = rng.uniform(iv.lower(), iv.upper());
  return values;
}

}  // namespace

HermitianMatrix random_spd(Index dim, const SpectralInterval& iv, RandomStream& rng) {
  const auto values = spectrum_in(dim, iv, rng);
  const CMatrix u = random_unitary(dim, rng);
  Eigen::VectorXd d(dim);
  for (Index i = 0; i < dim; ++i) d(i) = values[static_cast<std::size_t>(i)];
  return HermitianMatrix::hermitian_part(u * d.asDiagonal() * u.adjoint());
}

HermitianMatrix random_diagonal_spd(Index dim, const SpectralInterval& iv, RandomStream& rng) {
  return HermitianMatrix::diagonal(spectrum_in(dim, iv, rng));
}

CVector random_unit_vector(Index dim, RandomStream& rng) {
  if (dim < 1) throw DimensionError("vector dimension must be >= 1");
  CVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / n;
}

std::vector<double> random_weights(std::size_t count, RandomStream& rng) {
  std::vector<double> w(count);
  for (auto& x : w) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= sum;
  // Push the rounding residue into the largest weight so the sum is 1 to
  // within one ulp.
  const double residue = 1.0 - std::accumulate(w.begin(), w.end(), 0.0);
  *std::max_element(w.begin(), w.end()) += residue;
  return w;
}

namespace {

PositiveMap random_mixture(Index n, RandomStream& rng) {
  const auto k = static_cast<std::size_t>(1 + rng.below(3));
  std::vector<CMatrix> unitaries;
  for (std::size_t i = 0; i < k; ++i) unitaries.push_back(random_unitary(n, rng));
  return PositiveMap::unitary_mixture(std::move(unitaries), random_weights(k, rng));
}

PositiveMap random_compression(Index n, RandomStream& rng) {
  const Index k = n == 1 ? 1 : 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
  const CMatrix u = random_unitary(n, rng);
  return PositiveMap::compression(u.leftCols(k));
}

PositiveMap random_pinching(Index n, RandomStream& rng) {
  // Random permutation, then cut into contiguous runs.
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::vector<Index>> blocks;
  std::vector<Index> current;
  for (Index idx : perm) {
    current.push_back(idx);
    if (rng.uniform() < 0.5) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return PositiveMap::pinching(n, std::move(blocks));
}

}  // namespace

PositiveMap random_unital_map(Index input_dim, RandomStream& rng, MapFamily family) {
  switch (family) {
    case MapFamily::kUnitaryMixture:
      return random_mixture(input_dim, rng);
    case MapFamily::kCompression:
      return random_compression(input_dim, rng);
    case MapFamily::kAny:
      break;
  }
  const double u = rng.uniform();
  if (u < 0.5) return random_mixture(input_dim, rng);
  if (u < 0.65) return random_pinching(input_dim, rng);
  if (u < 0.9) return random_compression(input_dim, rng);
  return PositiveMap::identity(input_dim);
}

}  // namespace opineq
