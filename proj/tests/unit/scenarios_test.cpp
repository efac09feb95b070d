#include "pagecusum/scenarios.hpp"

#include <gtest/gtest.h>

#include "pagecusum/error.hpp"

namespace pagecusum {
namespace {

TEST(Scenarios, SizeScenario) {
  const auto s = make_scenario("table3-m500-gamma0-a05-QP");
  EXPECT_EQ(s.spec.m, 500u);
  EXPECT_EQ(s.spec.gamma, 0.0);
  EXPECT_EQ(s.spec.alpha, 0.05);
  EXPECT_FALSE(s.spec.change);
  EXPECT_EQ(s.spec.monitoring_horizon(), 2500u);
  EXPECT_EQ(s.spec.reps, kDeskSizeReps);
  ASSERT_EQ(s.spec.detectors.size(), 1u);
  const auto ref = s.reference_for(DetectorKind::PageTwoSided);
  ASSERT_TRUE(ref && ref->size);
  EXPECT_DOUBLE_EQ(*ref->size, 0.0286);

  const auto up = make_scenario("table3-m1000-gamma025-a10-QPu");
  EXPECT_DOUBLE_EQ(*up.reference_for(DetectorKind::PageUp)->size, 0.0852);

  const auto sq = make_scenario("table4-m100-gamma025-a05-SP");
  EXPECT_DOUBLE_EQ(*sq.reference_for(DetectorKind::SqPageTwoSided)->size, 0.1072);
  EXPECT_DOUBLE_EQ(*make_scenario("table4-m1000-gamma025-a05-SP").reference_for(DetectorKind::SqPageTwoSided)->size,
                   0.0520);
}

TEST(Scenarios, SizeScenarioWithoutDetectorRunsWholeTable) {
  const auto s = make_scenario("table3-m500-gamma0");
  EXPECT_EQ(s.spec.alpha, 0.05);
  EXPECT_EQ(s.spec.detectors.size(), 2u);
  EXPECT_EQ(make_scenario("table4-m200-gamma049-a10").spec.detectors.size(), 4u);
}

TEST(Scenarios, DelayScenario) {
  const auto s = make_scenario("table8-m200-gamma0-QP-median");
  EXPECT_TRUE(s.median_only);
  EXPECT_EQ(s.spec.m, 200u);
  ASSERT_TRUE(s.spec.change);
  EXPECT_EQ(s.spec.change->k_star, 1000u);
  EXPECT_EQ(s.spec.monitoring_horizon(), 3000u);
  EXPECT_DOUBLE_EQ(s.spec.drift(), 0.5);
  EXPECT_EQ(s.spec.reps, kDeskDelayReps);
  const auto ref = s.reference_for(DetectorKind::PageTwoSided);
  ASSERT_TRUE(ref && ref->delay);
  EXPECT_DOUBLE_EQ(ref->delay->median, 256.0);
  EXPECT_DOUBLE_EQ(ref->delay->q1, 182.0);
  EXPECT_DOUBLE_EQ(ref->delay->q3, 313.0);
  EXPECT_DOUBLE_EQ(*&make_scenario("table8-m200-gamma0").reference_for(DetectorKind::CusumAbs)->delay->median, 293.0);
  EXPECT_EQ(make_scenario("table6-m1000-gamma025").spec.change->k_star, 1u);
  EXPECT_EQ(make_scenario("table7-m1000-gamma049").spec.change->k_star, 1000u);
}

TEST(Scenarios, OrthogonalChange) {
  const auto s = make_scenario("h2-residual-detectors");
  ASSERT_TRUE(s.spec.change);
  EXPECT_DOUBLE_EQ(s.spec.drift(), 0.0);
  const auto t9 = make_scenario("table9-kstar5m");
  EXPECT_EQ(t9.spec.m, 1000u);
  EXPECT_EQ(t9.spec.change->k_star, 5000u);
  EXPECT_DOUBLE_EQ(t9.spec.drift(), 0.0);
}

TEST(Scenarios, EveryListedNameResolves) {
  const auto names = scenario_names();
  EXPECT_GT(names.size(), 100u);
  for (const auto& name : names) EXPECT_NO_THROW(make_scenario(name)) << name;
}

TEST(Scenarios, UnknownName) {
  for (const char* bad : {"table3-m300-gamma0-a05-QP", "table5-m200-gamma0", "table3-m500-gamma0-a05-SP", "nope"}) {
    try {
      make_scenario(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownScenario) << bad;
    }
  }
}

}  // namespace
}  // namespace pagecusum
