#pragma once

#include <vector>

#include "opineq/hermitian.hpp"
#include "opineq/positive_map.hpp"
#include "opineq/rng.hpp"

namespace opineq {

/// Haar unitary: QR of a complex Gaussian matrix with R's diagonal phases
/// absorbed into Q.
CMatrix random_unitary(Index dim, RandomStream& rng);

/// Positive definite matrix with spectrum in [m, M] and a Haar eigenbasis.
/// For dim >= 2 both endpoints are eigenvalues, so the sandwich is tight;
/// dim == 1 draws the single eigenvalue uniformly.
HermitianMatrix random_spd(Index dim, const SpectralInterval& iv, RandomStream& rng);

/// Same, with the eigenbasis fixed to the identity (diagonal output).
HermitianMatrix random_diagonal_spd(Index dim, const SpectralInterval& iv, RandomStream& rng);

CVector random_unit_vector(Index dim, RandomStream& rng);

/// Positive weights summing to one (normalized exponentials).
std::vector<double> random_weights(std::size_t count, RandomStream& rng);

enum class MapFamily {
  kAny,           // mixture, pinching, compression or identity
  kUnitaryMixture,
  kCompression,
};

/// A random unital positive map with the given input dimension.
PositiveMap random_unital_map(Index input_dim, RandomStream& rng, MapFamily family = MapFamily::kAny);

}  // namespace opineq
