#include <gtest/gtest.h>

#include <cmath>

#include "opineq/error.hpp"
#include "opineq/functions.hpp"

using namespace opineq;

TEST(Catalog, PowerFlags) {
  const auto sq = catalog::square();
  EXPECT_TRUE(sq.flags().operator_convex);
  EXPECT_FALSE(sq.flags().operator_monotone_increasing);
  EXPECT_TRUE(sq.flags().convex);
  EXPECT_EQ(sq.domain(), FunctionDomain::kReal);

  const auto root = catalog::sqrt();
  EXPECT_TRUE(root.flags().operator_monotone_increasing);
  EXPECT_TRUE(root.flags().operator_concave);
  EXPECT_FALSE(root.flags().operator_convex);
  EXPECT_TRUE(root.requires_positive());

  const auto inv = catalog::reciprocal();
  EXPECT_TRUE(inv.flags().operator_convex);
  EXPECT_TRUE(inv.flags().operator_monotone_decreasing);
  EXPECT_TRUE(inv.flags().convex);

  // t^3 is convex but not operator convex.
  const auto cube = catalog::power(3.0);
  EXPECT_TRUE(cube.flags().convex);
  EXPECT_FALSE(cube.flags().operator_convex);

  // t^-2 is not operator convex either.
  EXPECT_FALSE(catalog::power(-2.0).flags().operator_convex);
}

TEST(Catalog, InversesCompose) {
  for (double p : {1.5, 2.0, 0.5, -1.0, 3.0}) {
    const auto f = catalog::power(p);
    ASSERT_TRUE(f.has_inverse());
    for (double t : {0.3, 1.0, 2.7}) EXPECT_NEAR(f.inverse_evaluate(f(t)), t, 1e-13 * t);
  }
  const auto lg = catalog::log();
  EXPECT_NEAR(lg.inverse_evaluate(lg(2.5)), 2.5, 1e-14);
  const auto aff = catalog::affine(2.0, 1.0);
  EXPECT_DOUBLE_EQ(aff.inverse_evaluate(aff(3.0)), 3.0);
  EXPECT_FALSE(catalog::affine(0.0, 1.0).has_inverse());
  EXPECT_THROW(catalog::affine(0.0, 1.0).inverse(), DomainError);
}

TEST(Catalog, Normalization) {
  EXPECT_TRUE(catalog::sqrt().normalized());
  EXPECT_TRUE(catalog::power(0.25).normalized());
  EXPECT_FALSE(catalog::affine(1.0, 1.0).normalized());
  EXPECT_FALSE(catalog::log().normalized());
}

TEST(Catalog, NamesRoundTrip) {
  for (const auto& f : {catalog::power(1.5), catalog::power(1.0 / 3.0), catalog::power(-1.0),
                        catalog::log(), catalog::exp(), catalog::affine(2.0, -0.5)}) {
    const auto g = catalog::by_name(f.name());
    EXPECT_EQ(g.name(), f.name());
    EXPECT_EQ(g(1.7), f(1.7));
  }
  EXPECT_EQ(catalog::square().name(), "pow(2)");
  EXPECT_THROW(catalog::by_name("sin"), DomainError);
  EXPECT_THROW(catalog::by_name("pow(x)"), DomainError);
}
