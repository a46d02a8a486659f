#include <gtest/gtest.h>

#include "opineq/error.hpp"
#include "opineq/falsifier.hpp"
#include "opineq/registry.hpp"

using namespace opineq;

TEST(Falsifier, GridShape) {
  const auto g = FamilyGrid::standard();
  EXPECT_EQ(g.xs.size(), 8u);
  EXPECT_EQ(g.xs.front(), 0.5);
  EXPECT_EQ(g.xs.back(), 4.0);
  EXPECT_EQ(g.alphas.size(), 12u);
  EXPECT_EQ(g.size(), 8u * 12u * 12u);
}

TEST(Falsifier, ZeroBudgetIsEmpty) {
  SearchConfig c;
  c.budget = 0;
  EXPECT_TRUE(search_violations("eq11_candidate", c).empty());
}

TEST(Falsifier, UnknownAndUnsupported) {
  SearchConfig c;
  c.budget = 1;
  EXPECT_THROW(search_violations("nope", c), UnknownCheckError);
  EXPECT_THROW(search_violations("ando", FamilyGrid::standard()), HypothesisError);
}

TEST(Falsifier, TrueChecksOnGridAreClean) {
  for (const auto& e : check_registry())
    if (e.supports_family_grid && e.expected_to_hold)
      EXPECT_TRUE(search_violations(e.name, FamilyGrid::standard()).empty()) << e.name;
}

TEST(Falsifier, NoFalseAlarmsOnKantorovich) {
  SearchConfig c;
  c.budget = 10000;
  c.dims = {2, 3, 4, 5, 6, 7, 8};
  EXPECT_TRUE(search_violations("kantorovich", c).empty());
}

TEST(Falsifier, NoFalseAlarmsAcrossRegistry) {
  SearchConfig c;
  c.budget = 300;
  c.seed = 99;
  c.dims = {2, 5, 8};
  for (const auto& e : check_registry())
    if (e.expected_to_hold) EXPECT_TRUE(search_violations(e.name, c).empty()) << e.name;
}

TEST(Falsifier, RandomSearchFindsCandidateViolationsDeterministically) {
  SearchConfig c;
  c.budget = 400;
  c.seed = 5;
  c.dims = {3, 4};
  c.threads = 1;
  const auto a = search_violations("eq11_candidate", c);
  c.threads = 3;
  const auto b = search_violations("eq11_candidate", c);
  ASSERT_FALSE(a.empty());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
}

TEST(Falsifier, WitnessesRevalidate) {
  SearchConfig c;
  c.budget = 200;
  c.dims = {3};
  const auto reports = search_violations("eq11_candidate", c);
  ASSERT_FALSE(reports.empty());
  for (const auto& rep : reports) {
    EXPECT_LT(rep.margin, 0.0);
    const auto parsed = ViolationReport::from_json(nlohmann::json::parse(rep.to_json().dump()));
    const auto again = revalidate(parsed);
    EXPECT_FALSE(again.holds);
    EXPECT_NEAR(again.margin, rep.margin, 1e-10);
    EXPECT_EQ(again.difference_eigenvalues.size(), rep.eigenvalue_certificate.size());
  }
}
