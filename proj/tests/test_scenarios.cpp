#include <gtest/gtest.h>

#include "ncst/scenarios.hpp"

using namespace ncst;

namespace {

Instance square() { return parse_instance(R"({"name":"square","points":[[0,0],[6,0],[6,6],[0,6]]})"); }

ScenarioParams on(const Instance& inst) {
  ScenarioParams p;
  p.instance = inst;
  return p;
}

}  // namespace

TEST(Scenarios, MinimumSstBlockersOnSquare) {
  const auto r = run_scenario("theorem1", on(square()));
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  ASSERT_EQ(r.instances().size(), 1U);
  EXPECT_EQ(r.instances()[0]["minimum_blockers"], 8);
  EXPECT_EQ(r.instances()[0]["classified_star_or_comb"], 8);
}

TEST(Scenarios, SingleInstanceScenarios) {
  for (const char* name : {"prop_size", "theorem2", "theorem3", "theorem4"}) {
    const auto r = run_scenario(name, on(square()));
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_GT(r.total(), 1U) << name;
  }
}

TEST(Scenarios, DefaultSuiteShape) {
  const auto suite = default_suite(1);
  ASSERT_EQ(suite.size(), 31U);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_TRUE(suite[i].convex);
    EXPECT_EQ(suite[i].instance.points.size(), i + 3);
    EXPECT_TRUE(to_config(suite[i].instance).is_convex_position());
  }
  for (std::size_t i = 6; i < 31; ++i) {
    EXPECT_GE(suite[i].instance.points.size(), 4U);
    EXPECT_LE(suite[i].instance.points.size(), 7U);
  }
}

TEST(Scenarios, PropSizeOnConvexSuite) {
  const auto r = run_scenario("prop_size");
  EXPECT_TRUE(r.passed());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(r.instances()[i]["minimum_blocker_size"], i + 2);
}

TEST(Scenarios, Fig7Passes) {
  const auto r = run_scenario("fig7");
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(r.instances()[0]["witness"].size(), 6U);
}

TEST(Scenarios, FuzzIsDeterministic) {
  ScenarioParams p;
  p.seed = 9;
  p.trials = 40;
  const auto a = run_scenario("construct_fuzz", p).to_json().dump();
  const auto b = run_scenario("construct_fuzz", p).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_TRUE(run_scenario("construct_fuzz", p).passed());
  p.seed = 10;
  EXPECT_NE(a, run_scenario("construct_fuzz", p).to_json().dump());
}

TEST(Scenarios, FailurePayloadReplays) {
  // Swap in a witness that uses a B edge: the stored-witness check fails.
  Instance bad = fig7_instance();
  bad.edges["T"] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}};
  const auto r = run_scenario("fig7", on(bad));
  ASSERT_FALSE(r.passed());
  const auto& failure = r.failures()[0];
  EXPECT_EQ(failure["assertion"], "stored_witness_avoids_B");
  EXPECT_NE(failure["detail"].get<std::string>().find("disjoint_from_B"), std::string::npos);

  const Instance replay = parse_instance(failure["instance"].dump());
  EXPECT_EQ(replay, bad);
  const auto again = run_scenario("fig7", on(replay));
  EXPECT_EQ(again.failures()[0]["assertion"], "stored_witness_avoids_B");
}

TEST(Scenarios, UnknownName) { EXPECT_THROW(run_scenario("theorem9"), UnknownScenario); }

TEST(Scenarios, TimingOnlyOnRequest) {
  ScenarioParams p;
  EXPECT_FALSE(run_scenario("fig7", p).to_json().contains("timing_ms"));
  p.timing = true;
  EXPECT_TRUE(run_scenario("fig7", p).to_json().contains("timing_ms"));
}

TEST(ForEachKSubset, CountsBinomials) {
  const Config c = to_config(square());  // 6 edges
  for (std::size_t k = 0; k <= 6; ++k) {
    std::size_t count = 0;
    detail::for_each_k_subset(c, k, [&](const EdgeSet& s) {
      EXPECT_EQ(s.size(), k);
      ++count;
    });
    const std::size_t binom[] = {1, 6, 15, 20, 15, 6, 1};
    EXPECT_EQ(count, binom[k]);
  }
}
