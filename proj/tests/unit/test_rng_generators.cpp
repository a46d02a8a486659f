#include <gtest/gtest.h>

#include <numeric>

#include "opineq/error.hpp"
#include "opineq/generators.hpp"
#include "oracles.hpp"

using namespace opineq;

TEST(RandomStream, DeterministicAndKeyed) {
  RandomStream a(7, "label", 3);
  RandomStream b(7, "label", 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  RandomStream c(7, "label", 4);
  RandomStream d(7, "other", 3);
  RandomStream e(8, "label", 3);
  RandomStream f(7, "label", 3);
  const auto first = f.next_u64();
  EXPECT_NE(first, c.next_u64());
  EXPECT_NE(first, d.next_u64());
  EXPECT_NE(first, e.next_u64());
}

TEST(RandomStream, SubstreamsAreIndependentOfParentPosition) {
  RandomStream a(1, "parent");
  const auto s1 = a.substream("child", 2);
  a.next_u64();
  a.next_u64();
  const auto s2 = a.substream("child", 2);
  EXPECT_EQ(s1.key(), s2.key());
  EXPECT_NE(a.substream("child", 1).key(), s1.key());
}

TEST(RandomStream, UniformAndBelowRanges) {
  RandomStream r(2, "ranges");
  std::vector<int> counts(6, 0);
  double sum = 0.0;
  constexpr int kDraws = 60000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ++counts[r.below(6)];
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 0.01);
  for (int c : counts) EXPECT_NEAR(c, kDraws / 6, 400);
  EXPECT_EQ(r.below(1), 0u);
}

TEST(RandomStream, NormalMoments) {
  RandomStream r(3, "normal");
  double s1 = 0.0;
  double s2 = 0.0;
  double c2 = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double z = r.normal();
    s1 += z;
    s2 += z * z;
    c2 += std::norm(r.complex_normal());
  }
  EXPECT_NEAR(s1 / kDraws, 0.0, 0.02);
  EXPECT_NEAR(s2 / kDraws, 1.0, 0.02);
  EXPECT_NEAR(c2 / kDraws, 1.0, 0.02);
}

TEST(Generators, UnitaryIsUnitary) {
  for (Index n = 1; n <= 8; ++n) {
    RandomStream r(4, "unitary", static_cast<std::uint64_t>(n));
    const CMatrix u = random_unitary(n, r);
    EXPECT_LE((u.adjoint() * u - CMatrix::Identity(n, n)).norm(), 1e-11);
  }
  RandomStream r(4, "unitary-1");
  EXPECT_NEAR(std::abs(random_unitary(1, r)(0, 0)), 1.0, 1e-15);
}

TEST(Generators, HaarSecondMoment) {
  // E|U_ij|^2 = 1/n for Haar measure.
  double acc = 0.0;
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) {
    RandomStream r(5, "haar", static_cast<std::uint64_t>(i));
    acc += std::norm(random_unitary(4, r)(0, 0));
  }
  EXPECT_NEAR(acc / kDraws, 0.25, 0.02);
}

TEST(Generators, RandomSpdHasTightSandwich) {
  const SpectralInterval ivs[] = {{1.0, 2.0}, {1.0, 4.0}, {0.5, 3.0}};
  for (int i = 0; i < 1000; ++i) {
    RandomStream r(6, "spd", static_cast<std::uint64_t>(i));
    const auto& iv = ivs[i % 3];
    const Index d = 2 + i % 7;
    const auto a = random_spd(d, iv, r);
    const auto b = spectral_bounds(a);
    ASSERT_NEAR(b.lower(), iv.lower(), 1e-11);
    ASSERT_NEAR(b.upper(), iv.upper(), 1e-11);
  }
  RandomStream r(6, "spd-1");
  const auto one = random_spd(1, SpectralInterval(1.0, 2.0), r);
  EXPECT_GE(one(0, 0).real(), 1.0);
  EXPECT_LE(one(0, 0).real(), 2.0);
}

TEST(Generators, DiagonalSpdAndTwoByTwo) {
  RandomStream r(7, "diag");
  const auto d = random_diagonal_spd(3, SpectralInterval(1.0, 4.0), r);
  EXPECT_EQ(d(0, 0).real(), 1.0);
  EXPECT_EQ(d(1, 1).real(), 4.0);
  EXPECT_EQ(d(0, 1), cplx(0.0));
  const auto two = eigenvalues(random_spd(2, SpectralInterval(0.5, 3.0), r));
  EXPECT_NEAR(two(0), 0.5, 1e-12);
  EXPECT_NEAR(two(1), 3.0, 1e-12);
}

TEST(Generators, UnitVectorsAndWeights) {
  RandomStream r(8, "vec");
  for (Index n = 1; n <= 6; ++n) EXPECT_NEAR(random_unit_vector(n, r).norm(), 1.0, 1e-14);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto w = random_weights(k, r);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-15);
    for (double x : w) EXPECT_GT(x, 0.0);
  }
  EXPECT_THROW(random_unit_vector(0, r), DimensionError);
}

TEST(Generators, MapFamiliesHonored) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    RandomStream r(9, "families", t);
    EXPECT_EQ(random_unital_map(4, r, MapFamily::kUnitaryMixture).kind(), "unitary_mixture");
    const auto c = random_unital_map(4, r, MapFamily::kCompression);
    EXPECT_EQ(c.kind(), "compression");
    EXPECT_LT(c.output_dim(), 4);
  }
}
