#include "pagecusum/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "pagecusum/error.hpp"

namespace pagecusum {
namespace {

std::vector<Observation> intercept_only(std::initializer_list<double> ys) {
  std::vector<Observation> rows;
  for (double y : ys) rows.push_back(Observation{y, {1.0}});
  return rows;
}

std::vector<Observation> random_rows(std::size_t m, std::size_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::vector<Observation> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Observation obs{0.0, {1.0}};
    for (std::size_t j = 1; j < p; ++j) obs.x.push_back(1.0 + 2.0 * z(rng));
    obs.y = 0.5 - obs.x.back() + z(rng);
    rows.push_back(obs);
  }
  return rows;
}

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(FitOls, InterceptOnlyIsTheMean) {
  const auto fit = fit_ols(intercept_only({1, 2, 3}));
  ASSERT_EQ(fit.beta_hat.size(), 1u);
  EXPECT_NEAR(fit.beta_hat[0], 2.0, 1e-12);
  EXPECT_EQ(fit.m, 3u);
  EXPECT_EQ(fit.p, 1u);
}

TEST(FitOls, ExactLine) {
  std::vector<Observation> rows;
  for (double x : {-1.5, 0.0, 0.3, 2.0, 7.25}) rows.push_back(Observation{2.0 + 3.0 * x, {1.0, x}});
  const auto fit = fit_ols(rows);
  EXPECT_NEAR(fit.beta_hat[0], 2.0, 1e-12);
  EXPECT_NEAR(fit.beta_hat[1], 3.0, 1e-12);
  EXPECT_NEAR(fit.sigma_hat, 0.0, 1e-12);
}

TEST(FitOls, SigmaUsesCenteredFormWithDivisorMMinusP) {
  const auto fit = fit_ols(intercept_only({1, 2, 3, 10}));
  EXPECT_NEAR(fit.beta_hat[0], 4.0, 1e-12);
  EXPECT_NEAR(fit.sigma_hat * fit.sigma_hat, 50.0 / 3.0, 1e-10);
  EXPECT_NEAR(fit.mean_sq_train_residual, 50.0 / 4.0, 1e-12);
}

TEST(FitOls, NormalEquations) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rows = random_rows(50 + seed, 1 + seed % 4, seed);
    const auto fit = fit_ols(rows);
    const auto e = residuals(fit.beta_hat, rows);
    for (std::size_t j = 0; j < fit.p; ++j) {
      double dot = 0.0;
      double scale = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        dot += e[i] * rows[i].x[j];
        scale = std::max(scale, std::abs(rows[i].x[j]) * std::max(1.0, std::abs(rows[i].y)));
      }
      EXPECT_LE(std::abs(dot), 1e-8 * static_cast<double>(rows.size()) * scale);
    }
  }
}

TEST(FitOls, RowOrderInvariance) {
  auto rows = random_rows(80, 3, 11);
  const auto a = fit_ols(rows);
  std::mt19937_64 rng(5);
  std::shuffle(rows.begin(), rows.end(), rng);
  const auto b = fit_ols(rows);
  for (std::size_t j = 0; j < a.p; ++j) {
    EXPECT_NEAR(a.beta_hat[j], b.beta_hat[j], 1e-10 * std::max(1.0, std::abs(a.beta_hat[j])));
  }
}

TEST(FitOls, Errors) {
  expect_code(ErrorCode::DegenerateSample, [] { fit_ols(intercept_only({1.0})); });
  std::vector<Observation> collinear;
  for (double x : {1.0, 2.0, 3.0, 4.0}) collinear.push_back(Observation{x, {1.0, x, 2.0 * x}});
  expect_code(ErrorCode::RankDeficient, [&] { fit_ols(collinear); });
  std::vector<Observation> ragged = {Observation{1, {1, 2}}, Observation{2, {1}}, Observation{3, {1, 3}},
                                     Observation{3, {1, 5}}};
  expect_code(ErrorCode::DimensionMismatch, [&] { fit_ols(ragged); });
}

TEST(Residual, Examples) {
  RegressionFit fit;
  fit.beta_hat = {2.0, 3.0};
  fit.p = 2;
  EXPECT_DOUBLE_EQ(residual(fit, Observation{8.0, {1.0, 2.0}}), 0.0);
  fit.beta_hat = {1.0, 1.0};
  EXPECT_DOUBLE_EQ(residual(fit, Observation{1.0, {1.0, 0.5}}), -0.5);
  fit.beta_hat = {0.0, 0.0};
  EXPECT_DOUBLE_EQ(residual(fit, Observation{-4.5, {1.0, 9.0}}), -4.5);
  expect_code(ErrorCode::DimensionMismatch, [&] { residual(fit, Observation{1.0, {1.0}}); });
}

TEST(Observation, Validation) {
  const double xs[] = {0.5, -2.0};
  const auto obs = Observation::with_intercept(3.0, xs);
  EXPECT_EQ(obs.dimension(), 3u);
  EXPECT_EQ(obs.x[0], 1.0);
  EXPECT_NO_THROW(validate(obs));
  EXPECT_THROW(validate(Observation{1.0, {0.0, 1.0}}), Error);
  EXPECT_THROW(validate(Observation{NAN, {1.0}}), Error);
  EXPECT_THROW(validate(Observation{1.0, {}}), Error);
}

}  // namespace
}  // namespace pagecusum
