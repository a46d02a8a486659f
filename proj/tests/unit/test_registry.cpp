#include <gtest/gtest.h>

#include <set>

#include "opineq/error.hpp"
#include "opineq/json_io.hpp"
#include "opineq/registry.hpp"

using namespace opineq;

TEST(Registry, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const auto& e : check_registry()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.variants.empty());
    EXPECT_EQ(&find_check(e.name), &e);
  }
  EXPECT_THROW(find_check("no_such_check"), UnknownCheckError);
  EXPECT_FALSE(find_check("eq11_candidate").expected_to_hold);
  EXPECT_TRUE(find_check("kantorovich").supports_family_grid);
}

TEST(Registry, GeneratorsProduceValidInstances) {
  for (const auto& e : check_registry())
    for (const auto& v : e.variants)
      for (Index dim : {1, 2, 5}) {
        auto rng = trial_stream(1, "gen-test", e, v, static_cast<std::uint64_t>(dim));
        const auto inst = e.generate(rng, dim, v);
        const auto results = evaluate_variant(e, v, inst, kDefaultLoewnerTolerance);
        ASSERT_FALSE(results.empty()) << e.name;
        for (const auto& r : results) EXPECT_EQ(r.params.at("variant"), v.label);
        // The serialized instance evaluates identically.
        const auto back = instance_from_json(instance_to_json(inst));
        const auto again = evaluate_variant(e, v, back, kDefaultLoewnerTolerance);
        ASSERT_EQ(again.size(), results.size());
        for (std::size_t i = 0; i < results.size(); ++i)
          EXPECT_EQ(again[i].margin, results[i].margin) << e.name;
      }
}

TEST(Suite, ReportIndependentOfThreadCount) {
  SuiteConfig c;
  c.trials = 12;
  c.dims = {2, 3};
  c.threads = 1;
  const auto serial = run_suite(c).to_json();
  c.threads = 4;
  const auto parallel = run_suite(c).to_json();
  EXPECT_EQ(serial.dump(), parallel.dump());
  EXPECT_TRUE(serial.at("ok").get<bool>());
  EXPECT_EQ(serial.at("failures").size(), 0u);
}

TEST(Suite, ReportSchema) {
  SuiteConfig c;
  c.names = {"kantorovich", "refinement"};
  c.trials = 20;
  c.seed = 7;
  const auto j = run_suite(c).to_json();
  for (const char* key : {"suite", "seed", "trials", "dims", "tolerance", "checks", "min_margin",
                          "failures", "ok"})
    EXPECT_TRUE(j.contains(key)) << key;
  ASSERT_EQ(j.at("checks").size(), 2u);
  const auto& ref = j.at("checks")[1];
  EXPECT_EQ(ref.at("check_name"), "refinement");
  EXPECT_EQ(ref.at("evaluations"), 40);
  EXPECT_GT(ref.at("max_gap").get<double>(), 1e-6);
  EXPECT_TRUE(ref.at("worst").contains("margin"));
  EXPECT_GE(j.at("min_margin").get<double>(), -1e-9);
}

TEST(Suite, CandidateIsReportedAsFailing) {
  SuiteConfig c;
  c.names = {"eq11_candidate"};
  c.trials = 200;
  c.dims = {3, 4};
  const auto report = run_suite(c);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_GT(report.checks[0].failures, 0);
  EXPECT_TRUE(report.checks[0].ok);  // failing was the expectation
  EXPECT_TRUE(report.ok);
  const auto j = report.to_json();
  ASSERT_FALSE(j.at("failures").empty());
  EXPECT_TRUE(j.at("failures")[0].contains("instance"));
}

TEST(Suite, RejectsBadConfig) {
  SuiteConfig c;
  c.dims = {};
  EXPECT_THROW(run_suite(c), DomainError);
  c.dims = {0};
  EXPECT_THROW(run_suite(c), DimensionError);
  c.dims = {2};
  c.names = {"bogus"};
  EXPECT_THROW(run_suite(c), UnknownCheckError);
}
