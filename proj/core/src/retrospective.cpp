#include "pagecusum/retrospective.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pagecusum/error.hpp"

namespace pagecusum {

std::vector<double> tilted_cusum(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<double> c(n + 1, 0.0);
  if (n == 0) return c;
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  double partial = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    partial += values[k - 1];
    c[k] = partial - static_cast<double>(k) / static_cast<double>(n) * total;
  }
  c[n] = 0.0;
  return c;
}

std::size_t cusum_argmax(std::span<const double> cusum, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= cusum.size()) fail(ErrorCode::InvalidArgument, "empty argmax range");
  std::size_t best = lo;
  for (std::size_t k = lo + 1; k <= hi; ++k) {
    if (std::abs(cusum[k]) > std::abs(cusum[best])) best = k;
  }
  return best;
}

SegmentReport estimate_changepoint(std::span<const Observation> data, std::size_t n, RetrospectiveVariant variant,
                                   const LrvConfig& lrv) {
  if (n > data.size()) fail(ErrorCode::SampleTooShort, "n exceeds the number of observations");
  const auto rows = data.first(n);
  const std::size_t p = rows.empty() ? 0 : rows.front().dimension();
  if (rows.empty() || n <= 2 * (p + 1)) {
    fail(ErrorCode::SampleTooShort,
         "need more than 2(p+1) = " + std::to_string(2 * (p + 1)) + " observations, got " + std::to_string(n));
  }

  const std::vector<double> beta = ols_coefficients(rows);
  std::vector<double> values = residuals(beta, rows);
  if (variant == RetrospectiveVariant::SquaredResiduals) {
    for (double& v : values) v *= v;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    for (double& v : values) v -= mean;
  }

  SegmentReport report;
  report.n = n;
  report.variant = variant;
  report.cusum = tilted_cusum(values);
  report.k_hat = cusum_argmax(report.cusum, p + 1, n - p - 1);
  report.max_abs_cusum = std::abs(report.cusum[report.k_hat]);

  double scale = 1.0;
  for (const auto& obs : rows) scale += std::abs(obs.y);
  report.degenerate = report.max_abs_cusum <= 1e-10 * scale;
  if (report.degenerate) report.k_hat = p + 1;

  report.before = fit_ols(rows.first(report.k_hat), lrv);
  report.after = fit_ols(rows.subspan(report.k_hat), lrv);
  return report;
}

}  // namespace pagecusum
