#include <gtest/gtest.h>

#include <cmath>

#include "opineq/constants.hpp"
#include "opineq/error.hpp"
#include "oracles.hpp"

using namespace opineq;

namespace {

const SpectralInterval kIntervals[] = {{1.0, 2.0}, {1.0, 4.0}, {0.5, 3.0}};
constexpr double kOracleTol = 1e-8;

}  // namespace

TEST(Constants, KantorovichAgainstGrid) {
  for (const auto& iv : kIntervals)
    EXPECT_NEAR(kantorovich_constant(iv), oracle::kantorovich(iv.lower(), iv.upper()), kOracleTol);
  EXPECT_DOUBLE_EQ(kantorovich_constant(SpectralInterval(1.0, 2.0)), 9.0 / 8.0);
}

TEST(Constants, GeneralizedKantorovichAgainstGrid) {
  for (const auto& iv : kIntervals)
    for (double p : {-1.0, 1.5, 2.0, 3.0})
      EXPECT_NEAR(generalized_kantorovich(p, iv),
                  oracle::generalized_kantorovich(p, iv.lower(), iv.upper()), kOracleTol)
          << "p = " << p << " on (" << iv.lower() << ", " << iv.upper() << ")";
}

TEST(Constants, GeneralizedKantorovichSpecialValues) {
  for (const auto& iv : kIntervals) {
    const double k = kantorovich_constant(iv);
    EXPECT_NEAR(generalized_kantorovich(2.0, iv), k, 1e-12 * k);
    EXPECT_NEAR(generalized_kantorovich(-1.0, iv), k, 1e-12 * k);
    EXPECT_EQ(generalized_kantorovich(1.0, iv), 1.0);
    EXPECT_EQ(generalized_kantorovich(0.0, iv), 1.0);
    EXPECT_THROW(generalized_kantorovich(0.5, iv), DomainError);
  }
  EXPECT_EQ(generalized_kantorovich(3.0, SpectralInterval(2.0, 2.0)), 1.0);
}

TEST(Constants, AlphaAgainstGrid) {
  for (const auto& iv : kIntervals)
    for (double p : {2.0, 1.5}) {
      const auto f = catalog::power(p);
      EXPECT_NEAR(alpha_constant(f, iv),
                  oracle::chord_ratio([p](double t) { return std::pow(t, p); }, iv.lower(),
                                      iv.upper()),
                  kOracleTol);
    }
  EXPECT_EQ(alpha_constant(catalog::square(), SpectralInterval(3.0, 3.0)), 1.0);
  EXPECT_THROW(alpha_constant(catalog::log(), SpectralInterval(0.5, 3.0)), DomainError);
}

TEST(Constants, Beta0AgainstGrid) {
  for (const auto& iv : kIntervals)
    EXPECT_NEAR(beta0_constant(catalog::sqrt(), iv),
                oracle::beta0([](double t) { return std::sqrt(t); }, iv.lower(), iv.upper()),
                kOracleTol);
  EXPECT_EQ(beta0_constant(catalog::sqrt(), SpectralInterval(2.0, 2.0)), 0.0);
  // A line is its own chord.
  EXPECT_NEAR(beta0_constant(catalog::affine(2.0, 1.0), SpectralInterval(1.0, 4.0)), 0.0, 1e-14);
}

TEST(Constants, BetaPAgainstGrid) {
  for (const auto& iv : kIntervals)
    for (double p : {1.25, 1.5, 2.0})
      EXPECT_NEAR(beta_p_constant(p, iv), oracle::beta_p(p, iv.lower(), iv.upper()), kOracleTol)
          << "p = " << p;
  EXPECT_EQ(beta_p_constant(1.0, SpectralInterval(1.0, 4.0)), 0.0);
  EXPECT_THROW(beta_p_constant(0.5, SpectralInterval(1.0, 4.0)), DomainError);
}

TEST(Constants, BetaTwoClosedForm) {
  for (const auto& iv : kIntervals) {
    const double m = iv.lower();
    const double big_m = iv.upper();
    const double expected = (big_m - m) * (big_m - m) / (2.0 * (big_m + m));
    EXPECT_NEAR(beta_p_constant(2.0, iv), expected, 1e-10 * expected);
    // Twice beta0 of the inverse function over the image interval, the general route.
    const double general =
        2.0 * beta0_constant(catalog::sqrt(), image_interval(catalog::square(), iv));
    EXPECT_NEAR(general, expected, 1e-10 * expected);
  }
}

TEST(Constants, MondPecaricBetaAgainstGrid) {
  for (const auto& iv : kIntervals)
    for (double p : {2.0, 3.0, -1.0})
      for (double alpha : {0.0, 1.0, generalized_kantorovich(p, iv)}) {
        const auto f = catalog::power(p);
        EXPECT_NEAR(mond_pecaric_beta(f, iv, alpha),
                    oracle::mond_pecaric_beta([p](double t) { return std::pow(t, p); },
                                              iv.lower(), iv.upper(), alpha),
                    kOracleTol)
            << "p = " << p << " alpha = " << alpha;
      }
}

TEST(Constants, MondPecaricBetaWithKantorovichAlphaIsZero) {
  // With alpha = K(p) the bound reduces to the pure multiplicative form.
  for (const auto& iv : kIntervals)
    for (double p : {2.0, 3.0, -1.0})
      EXPECT_NEAR(mond_pecaric_beta(catalog::power(p), iv, generalized_kantorovich(p, iv)), 0.0,
                  1e-10);
}

TEST(Constants, ChordAndImage) {
  const auto line = chord(catalog::square(), SpectralInterval(1.0, 3.0));
  EXPECT_DOUBLE_EQ(line.slope, 4.0);
  EXPECT_DOUBLE_EQ(line.intercept, -3.0);
  EXPECT_THROW(chord(catalog::square(), SpectralInterval(1.0, 1.0)), DomainError);
  const auto img = image_interval(catalog::reciprocal(), SpectralInterval(0.5, 4.0));
  EXPECT_NEAR(img.lower(), 0.25, 1e-12);
  EXPECT_NEAR(img.upper(), 2.0, 1e-12);
}

TEST(Constants, MaximizeFindsInteriorPeak) {
  const auto best = maximize([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0);
  EXPECT_NEAR(best.argmax, 0.3, 1e-6);
  EXPECT_NEAR(best.value, 0.0, 1e-12);
  const auto edge = maximize([](double t) { return t; }, -1.0, 2.0);
  EXPECT_EQ(edge.value, 2.0);
}
