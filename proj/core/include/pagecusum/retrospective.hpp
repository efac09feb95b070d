#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pagecusum/model.hpp"

namespace pagecusum {

enum class RetrospectiveVariant {
  Residuals,         // CUSUM of full-sample OLS residuals
  SquaredResiduals,  // CUSUM of centered squared residuals
};

/// A-posteriori split of a combined training + monitoring sample.
struct SegmentReport {
  std::size_t n = 0;
  /// Last index (1-based) of the first segment; segments are [1, k_hat] and [k_hat+1, n].
  std::size_t k_hat = 0;
  /// The tilted CUSUM vanished, so k_hat carries no information.
  bool degenerate = false;
  RetrospectiveVariant variant = RetrospectiveVariant::Residuals;
  double max_abs_cusum = 0.0;
  RegressionFit before;
  RegressionFit after;
  /// C(0..n).
  std::vector<double> cusum;
};

/// C(k) = sum_{i<=k} v_i - (k/n) sum_{i<=n} v_i for k = 0..n.
std::vector<double> tilted_cusum(std::span<const double> values);

/// First maximizer of |C(k)| over lo <= k <= hi.
std::size_t cusum_argmax(std::span<const double> cusum, std::size_t lo, std::size_t hi);

/// Fits OLS on the first n rows, locates the maximizer of |C(k)| over
/// k in [p+1, n-p-1] so both segments can be refitted, and refits them.
/// Throws SampleTooShort when n <= 2(p+1), RankDeficient from segment fits.
SegmentReport estimate_changepoint(std::span<const Observation> data, std::size_t n,
                                   RetrospectiveVariant variant = RetrospectiveVariant::Residuals,
                                   const LrvConfig& lrv = {});

}  // namespace pagecusum
