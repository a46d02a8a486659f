#include <gtest/gtest.h>

#include <numbers>

#include "opineq/error.hpp"
#include "opineq/generators.hpp"
#include "opineq/positive_map.hpp"
#include "oracles.hpp"

using namespace opineq;

namespace {

void expect_unital_positive_linear(const PositiveMap& phi, std::uint64_t seed) {
  const Index n = phi.input_dim();
  EXPECT_LT(oracle::rel_diff(phi(HermitianMatrix::identity(n)),
                             HermitianMatrix::identity(phi.output_dim())),
            1e-12);
  RandomStream rng(seed, "map-props");
  const auto a = random_spd(n, SpectralInterval(0.1, 2.0), rng);
  const auto b = random_spd(n, SpectralInterval(0.1, 2.0), rng);
  EXPECT_GT(oracle::lambda_min(phi(a)), 0.0);
  const auto lin = phi(2.0 * a - b);
  EXPECT_LT(oracle::rel_diff(lin, 2.0 * phi(a) - phi(b)), 1e-12);
}

}  // namespace

TEST(PositiveMap, RandomMapsAreUnitalPositiveLinear) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    RandomStream rng(31, "maps", t);
    const Index n = 1 + static_cast<Index>(t % 6);
    expect_unital_positive_linear(random_unital_map(n, rng), t);
  }
}

TEST(PositiveMap, PinchingKeepsDiagonalBlocks) {
  const auto phi = PositiveMap::pinching(3, {{0, 2}, {1}});
  const auto a = HermitianMatrix::real({{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  const auto out = phi(a);
  EXPECT_EQ(out(0, 2), cplx(3.0));
  EXPECT_EQ(out(0, 1), cplx(0.0));
  EXPECT_EQ(out(1, 1), cplx(4.0));
  EXPECT_THROW(PositiveMap::pinching(3, {{0, 1}}), DomainError);
  EXPECT_THROW(PositiveMap::pinching(2, {{0, 1}, {1}}), DomainError);
  EXPECT_THROW(PositiveMap::pinching(2, {{0, 5}}), DimensionError);
}

TEST(PositiveMap, CompressionShrinksDimension) {
  RandomStream rng(32, "compression");
  const CMatrix u = random_unitary(5, rng);
  const auto phi = PositiveMap::compression(u.leftCols(2));
  EXPECT_EQ(phi.input_dim(), 5);
  EXPECT_EQ(phi.output_dim(), 2);
  expect_unital_positive_linear(phi, 1);
  CMatrix not_iso = u.leftCols(2) * 2.0;
  EXPECT_THROW(PositiveMap::compression(not_iso), DomainError);
  EXPECT_THROW(PositiveMap::compression(CMatrix::Identity(2, 3)), DimensionError);
}

TEST(PositiveMap, MixtureValidation) {
  EXPECT_THROW(PositiveMap::unitary_mixture({CMatrix::Identity(2, 2)}, {0.9}), DomainError);
  EXPECT_THROW(PositiveMap::unitary_mixture({CMatrix::Identity(2, 2) * 1.1}, {1.0}), DomainError);
  EXPECT_THROW(PositiveMap::unitary_mixture({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)},
                                            {0.5, 0.5}),
               DimensionError);
  EXPECT_THROW(PositiveMap::unitary_mixture({CMatrix::Identity(2, 2)}, {0.5, 0.5}), DimensionError);
}

TEST(PositiveMap, DirectSumWeightsComponents) {
  const auto phi = PositiveMap::direct_sum({PositiveMap::identity(2), PositiveMap::identity(2)},
                                           {0.25, 0.75});
  EXPECT_EQ(phi.input_dim(), 4);
  EXPECT_EQ(phi.output_dim(), 2);
  const auto x = direct_sum({HermitianMatrix::scalar(2, 4.0), HermitianMatrix::scalar(2, 8.0)});
  EXPECT_LT(oracle::rel_diff(phi(x), HermitianMatrix::scalar(2, 7.0)), 1e-15);
  expect_unital_positive_linear(phi, 2);
  EXPECT_THROW(PositiveMap::direct_sum({PositiveMap::identity(2), PositiveMap::identity(3)},
                                       {0.5, 0.5}),
               DimensionError);
}

TEST(PositiveMap, InducedCongruenceIsUnital) {
  RandomStream rng(33, "induced");
  const auto base = random_unital_map(4, rng, MapFamily::kCompression);
  const auto a = random_spd(4, SpectralInterval(1.0, 4.0), rng);
  const auto psi = PositiveMap::induced_congruence(base, a);
  expect_unital_positive_linear(psi, 3);
  // Psi(A^{-1}) = Phi(A)^{-1/2} Phi(I) Phi(A)^{-1/2} = Phi(A)^{-1}.
  EXPECT_LT(oracle::rel_diff(psi(inverse(a)), inverse(base(a))), 1e-11);
  EXPECT_THROW(PositiveMap::induced_congruence(base, HermitianMatrix::diagonal({1, 1, 1, -1})),
               DomainError);
}

TEST(PositiveMap, RotationMixture) {
  const auto r = rotation(std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(r(0, 1) + 1.0), 0.0, 1e-15);
  const auto a = HermitianMatrix::diagonal({2.0, 1.0});
  const auto same = make_rotation_mixture(0.0, 0.0);
  EXPECT_LT(oracle::rel_diff(same(a), a), 1e-15);
  // A quarter turn swaps the diagonal; mixing it with the identity averages.
  const auto half = make_rotation_mixture(0.0, std::numbers::pi / 2);
  EXPECT_LT(oracle::rel_diff(half(a), HermitianMatrix::scalar(2, 1.5)), 1e-15);
  EXPECT_EQ(same.kind(), "unitary_mixture");
}

TEST(VectorState, RequiresUnitNorm) {
  CVector x(2);
  x << 1.0, 1.0;
  EXPECT_THROW(VectorState{x}, DomainError);
  x /= std::sqrt(2.0);
  const VectorState s(x);
  EXPECT_NEAR(vector_state_value(s, HermitianMatrix::diagonal({1.0, 3.0})), 2.0, 1e-15);
}
