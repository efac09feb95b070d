#include "pagecusum/variance.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pagecusum/error.hpp"

namespace pagecusum {
namespace {

std::vector<double> normals(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  for (auto& v : out) v = z(rng);
  return out;
}

TEST(EstimateSigma, Examples) {
  const std::vector<double> zeros(10, 0.0);
  EXPECT_EQ(estimate_sigma(zeros, 2), 0.0);
  const std::vector<double> e = {-3, -2, -1, 6};
  EXPECT_NEAR(estimate_sigma(e, 1), std::sqrt(50.0 / 3.0), 1e-12);
  EXPECT_NEAR(estimate_sigma(e, 1), 4.0824829, 1e-6);
}

TEST(EstimateSigma, PositiveHomogeneityAndCentering) {
  const auto e = normals(200, 1);
  std::vector<double> scaled = e;
  std::vector<double> shifted = e;
  for (auto& v : scaled) v *= 3.5;
  for (auto& v : shifted) v += 100.0;
  EXPECT_NEAR(estimate_sigma(scaled, 2), 3.5 * estimate_sigma(e, 2), 1e-12);
  EXPECT_NEAR(estimate_sigma(shifted, 2), estimate_sigma(e, 2), 1e-10);
}

TEST(EstimateSigma, NeedsMoreThanP) {
  const std::vector<double> e = {1.0, 2.0};
  EXPECT_THROW(estimate_sigma(e, 2), Error);
}

TEST(EstimateEta, LagZeroIsPlugInStandardDeviationOfSquares) {
  const auto e = normals(500, 2);
  double mean = 0.0;
  for (double v : e) mean += v * v;
  mean /= static_cast<double>(e.size());
  double var = 0.0;
  for (double v : e) var += (v * v - mean) * (v * v - mean);
  var /= static_cast<double>(e.size());
  EXPECT_NEAR(estimate_eta(e, 0), std::sqrt(var), 1e-12);
  EXPECT_NEAR(estimate_eta(e, LrvConfig{std::nullopt, true}), std::sqrt(var), 1e-12);
}

TEST(EstimateEta, BartlettWeights) {
  const std::vector<double> e = {1.0, -2.0, 0.5, 3.0, -1.0, 0.0, 2.0};
  std::vector<double> s;
  for (double v : e) s.push_back(v * v);
  const double n = static_cast<double>(s.size());
  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= n;
  auto acov = [&](std::size_t j) {
    double acc = 0.0;
    for (std::size_t i = j; i < s.size(); ++i) acc += (s[i] - mean) * (s[i - j] - mean);
    return acc / n;
  };
  const double expected = acov(0) + 2.0 * (2.0 / 3.0) * acov(1) + 2.0 * (1.0 / 3.0) * acov(2);
  EXPECT_NEAR(estimate_eta(e, 2), std::sqrt(std::max(expected, 0.0)), 1e-12);
}

TEST(EstimateEta, IidNormalApproachesSqrtTwo) {
  const auto e = normals(100'000, 3);
  EXPECT_NEAR(estimate_eta(e, 0), std::sqrt(2.0), 0.05);
  EXPECT_NEAR(estimate_eta(e, LrvConfig{}), std::sqrt(2.0), 0.05);
}

TEST(EstimateEta, ConstantSquaresGiveZero) {
  std::vector<double> e;
  for (int i = 0; i < 50; ++i) e.push_back(i % 3 == 0 ? -1.5 : 1.5);
  EXPECT_NEAR(estimate_eta(e, 3), 0.0, 1e-12);
}

TEST(EstimateEta, NonnegativeOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto e = normals(30, seed);
    EXPECT_GE(estimate_eta(e, 1 + seed % 20), 0.0);
  }
}

TEST(EstimateEta, BandwidthMustBeBelowM) {
  const std::vector<double> e = {1.0, 2.0, 3.0};
  try {
    estimate_eta(e, 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BandwidthTooLarge);
  }
}

TEST(LrvConfig, DefaultBandwidthIsIntegerCubeRoot) {
  EXPECT_EQ(default_bandwidth(1), 1u);
  EXPECT_EQ(default_bandwidth(7), 1u);
  EXPECT_EQ(default_bandwidth(8), 2u);
  EXPECT_EQ(default_bandwidth(999), 9u);
  EXPECT_EQ(default_bandwidth(1000), 10u);
  EXPECT_EQ(default_bandwidth(1'000'000), 100u);
  EXPECT_EQ(LrvConfig{}.resolve_bandwidth(200), 5u);
  EXPECT_EQ((LrvConfig{7, false}.resolve_bandwidth(200)), 7u);
  EXPECT_EQ((LrvConfig{7, true}.resolve_bandwidth(200)), 0u);
}

}  // namespace
}  // namespace pagecusum
