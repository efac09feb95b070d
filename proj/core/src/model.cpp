#include "pagecusum/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "pagecusum/error.hpp"

namespace pagecusum {

namespace {

constexpr double kRankTolerance = 1e-10;

std::size_t common_dimension(std::span<const Observation> rows) {
  const std::size_t p = rows.front().dimension();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dimension() != p) {
      fail(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].dimension()) + " regressors, expected " +
                                             std::to_string(p));
    }
    validate(rows[i]);
  }
  return p;
}

}  // namespace

Observation Observation::with_intercept(double y, std::span<const double> regressors) {
  Observation obs;
  obs.y = y;
  obs.x.reserve(regressors.size() + 1);
  obs.x.push_back(1.0);
  obs.x.insert(obs.x.end(), regressors.begin(), regressors.end());
  return obs;
}

void validate(const Observation& obs) {
  if (obs.x.empty()) fail(ErrorCode::InvalidArgument, "observation has no regressors");
  if (obs.x[0] != 1.0) fail(ErrorCode::InvalidArgument, "first regressor must be the intercept 1");
  if (!std::isfinite(obs.y)) fail(ErrorCode::InvalidArgument, "response is not finite");
  for (double v : obs.x) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "regressor is not finite");
  }
}

std::vector<double> ols_coefficients(std::span<const Observation> rows) {
  if (rows.empty()) fail(ErrorCode::DegenerateSample, "no observations");
  const std::size_t p = common_dimension(rows);
  const std::size_t n = rows.size();
  if (n <= p) {
    fail(ErrorCode::DegenerateSample,
         "need more rows (" + std::to_string(n) + ") than regressors (" + std::to_string(p) + ")");
  }

  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd response(n);
  for (std::size_t i = 0; i < n; ++i) {
    response(static_cast<Eigen::Index>(i)) = rows[i].y;
    for (std::size_t j = 0; j < p; ++j) {
      design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i].x[j];
    }
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  const double largest = diag.maxCoeff();
  if (!(largest > 0.0) || diag.minCoeff() <= kRankTolerance * largest) {
    fail(ErrorCode::RankDeficient, "design matrix is rank deficient");
  }
  const Eigen::VectorXd beta = qr.solve(response);
  return {beta.data(), beta.data() + beta.size()};
}

std::vector<double> residuals(std::span<const double> beta, std::span<const Observation> rows) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& obs : rows) {
    if (obs.dimension() != beta.size()) {
      fail(ErrorCode::DimensionMismatch, "observation has " + std::to_string(obs.dimension()) +
                                             " regressors, fit has " + std::to_string(beta.size()));
    }
    double fitted = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) fitted += obs.x[j] * beta[j];
    out.push_back(obs.y - fitted);
  }
  return out;
}

RegressionFit fit_ols(std::span<const Observation> training, const LrvConfig& lrv) {
  RegressionFit fit;
  fit.beta_hat = ols_coefficients(training);
  fit.m = training.size();
  fit.p = fit.beta_hat.size();

  const std::vector<double> e = residuals(fit.beta_hat, training);
  double sq = 0.0;
  for (double v : e) sq += v * v;
  fit.mean_sq_train_residual = sq / static_cast<double>(fit.m);
  fit.sigma_hat = estimate_sigma(e, fit.p);
  fit.eta_hat = estimate_eta(e, lrv);
  return fit;
}

double residual(const RegressionFit& fit, const Observation& obs) {
  if (obs.dimension() != fit.p) {
    fail(ErrorCode::DimensionMismatch, "observation has " + std::to_string(obs.dimension()) +
                                           " regressors, fit has " + std::to_string(fit.p));
  }
  double fitted = 0.0;
  for (std::size_t j = 0; j < fit.p; ++j) fitted += obs.x[j] * fit.beta_hat[j];
  return obs.y - fitted;
}

}  // namespace pagecusum
