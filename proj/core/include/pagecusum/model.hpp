#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pagecusum/variance.hpp"

namespace pagecusum {

/// One regression row. x[0] is the intercept regressor and is always 1.
struct Observation {
  double y = 0.0;
  std::vector<double> x;

  /// Builds a row from the non-intercept regressors x_2..x_p.
  static Observation with_intercept(double y, std::span<const double> regressors);

  std::size_t dimension() const noexcept { return x.size(); }
};

/// Throws InvalidArgument unless x is non-empty, x[0] == 1 and every value is finite.
void validate(const Observation& obs);

/// Training-period fit. Frozen once built: monitoring never refits.
struct RegressionFit {
  std::vector<double> beta_hat;
  double sigma_hat = 0.0;
  double eta_hat = 0.0;
  std::size_t m = 0;
  std::size_t p = 0;
  /// (1/m) * sum of squared training residuals; centers the squared-residual CUSUM.
  double mean_sq_train_residual = 0.0;
};

/// Ordinary least squares on the training rows via column-pivoted QR.
/// Throws DegenerateSample (m <= p), DimensionMismatch (ragged rows) or
/// RankDeficient (|R_ii| <= 1e-10 * max |R_jj|).
RegressionFit fit_ols(std::span<const Observation> training, const LrvConfig& lrv = {});

/// Least-squares coefficients only, same rank rule as fit_ols.
std::vector<double> ols_coefficients(std::span<const Observation> rows);

/// y - x^T beta_hat. Throws DimensionMismatch.
double residual(const RegressionFit& fit, const Observation& obs);

/// Residuals of `rows` under arbitrary coefficients.
std::vector<double> residuals(std::span<const double> beta, std::span<const Observation> rows);

}  // namespace pagecusum
