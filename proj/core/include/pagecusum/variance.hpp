#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace pagecusum {

/// Scale-estimator settings for the squared-residual detectors.
///
/// The long-run variance of the squared errors is estimated with Bartlett
/// weights w_j = 1 - j/(q+1). When `bandwidth` is empty the cube-root rule
/// floor(m^(1/3)) is used. `independent_errors` forces q = 0, which is the
/// natural choice when the errors are known to be uncorrelated.
struct LrvConfig {
  std::optional<std::size_t> bandwidth;
  bool independent_errors = false;

  std::size_t resolve_bandwidth(std::size_t m) const;
};

/// floor(m^(1/3)), computed exactly in integers.
std::size_t default_bandwidth(std::size_t m) noexcept;

/// sqrt( 1/(m-p) * sum (e_i - mean(e))^2 ). Throws DegenerateSample if m <= p.
double estimate_sigma(std::span<const double> residuals, std::size_t p);

/// Bartlett long-run standard deviation of the squared residuals, truncated
/// at zero. Autocovariances use the full-sample mean of e^2 and divide by m.
/// Throws BandwidthTooLarge if bandwidth >= m.
double estimate_eta(std::span<const double> residuals, std::size_t bandwidth);

double estimate_eta(std::span<const double> residuals, const LrvConfig& cfg);

}  // namespace pagecusum
