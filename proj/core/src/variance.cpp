#include "pagecusum/variance.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pagecusum/error.hpp"

namespace pagecusum {

std::size_t default_bandwidth(std::size_t m) noexcept {
  auto q = static_cast<std::size_t>(std::cbrt(static_cast<double>(m)));
  while (q > 0 && q * q * q > m) --q;
  while ((q + 1) * (q + 1) * (q + 1) <= m) ++q;
  return q;
}

std::size_t LrvConfig::resolve_bandwidth(std::size_t m) const {
  if (independent_errors) return 0;
  return bandwidth.value_or(default_bandwidth(m));
}

double estimate_sigma(std::span<const double> residuals, std::size_t p) {
  const std::size_t m = residuals.size();
  if (m <= p) {
    fail(ErrorCode::DegenerateSample,
         "sigma estimate needs more residuals (" + std::to_string(m) + ") than parameters (" +
             std::to_string(p) + ")");
  }
  const double mean = std::accumulate(residuals.begin(), residuals.end(), 0.0) / static_cast<double>(m);
  double ss = 0.0;
  for (double e : residuals) ss += (e - mean) * (e - mean);
  return std::sqrt(ss / static_cast<double>(m - p));
}

double estimate_eta(std::span<const double> residuals, std::size_t bandwidth) {
  const std::size_t m = residuals.size();
  if (bandwidth >= m) {
    fail(ErrorCode::BandwidthTooLarge,
         "bandwidth " + std::to_string(bandwidth) + " must be below sample size " + std::to_string(m));
  }
  std::vector<double> centered(m);
  double mean = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    centered[i] = residuals[i] * residuals[i];
    mean += centered[i];
  }
  mean /= static_cast<double>(m);
  for (double& v : centered) v -= mean;

  const auto autocov = [&](std::size_t lag) {
    double s = 0.0;
    for (std::size_t i = lag; i < m; ++i) s += centered[i] * centered[i - lag];
    return s / static_cast<double>(m);
  };

  double eta2 = autocov(0);
  for (std::size_t j = 1; j <= bandwidth; ++j) {
    const double w = 1.0 - static_cast<double>(j) / static_cast<double>(bandwidth + 1);
    eta2 += 2.0 * w * autocov(j);
  }
  return std::sqrt(std::max(eta2, 0.0));
}

double estimate_eta(std::span<const double> residuals, const LrvConfig& cfg) {
  return estimate_eta(residuals, cfg.resolve_bandwidth(residuals.size()));
}

}  // namespace pagecusum
