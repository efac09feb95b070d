#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pagecusum/critical_values.hpp"
#include "pagecusum/detectors.hpp"
#include "pagecusum/model.hpp"
#include "pagecusum/rng.hpp"
#include "pagecusum/variance.hpp"

namespace pagecusum {

/// x_i = d2 + sigma_i z_i with sigma_i^2 = omega + alpha z_{i-1}^2 + beta sigma_{i-1}^2.
struct GarchSpec {
  double omega = 0.5;
  double alpha = 0.2;
  double beta = 0.3;
  double d2 = 1.0;

  /// Throws NonstationarySpec unless omega > 0, alpha, beta >= 0, alpha + beta < 1.
  void validate() const;
  /// E sigma_i^2 = (omega + alpha) / (1 - beta), which is also Var(x_i).
  double stationary_variance() const noexcept;
};

inline constexpr std::size_t kGarchBurnIn = 500;

/// Starts from the stationary variance and discards kGarchBurnIn steps.
std::vector<double> generate_garch_regressors(const GarchSpec& spec, std::size_t n, Rng& rng);
std::vector<double> generate_garch_regressors(const GarchSpec& spec, std::size_t n, std::uint64_t seed);

struct ChangeSpec {
  /// Change takes effect at observation m + k_star (1-based).
  std::size_t k_star = 1;
  /// beta_* - beta_0.
  std::vector<double> delta;
};

struct ExperimentSpec {
  std::size_t m = 100;
  std::size_t p = 2;
  std::vector<double> beta0 = {1.0, 1.0};
  double error_sigma2 = 0.5;
  GarchSpec garch;
  std::optional<ChangeSpec> change;
  std::vector<DetectorKind> detectors = {DetectorKind::PageTwoSided};
  double gamma = 0.0;
  double alpha = 0.05;
  /// Overrides the default horizon: 5m without a change, k* + 2000 with one.
  std::optional<std::size_t> horizon;
  std::size_t reps = 1000;
  std::uint64_t master_seed = 1;
  unsigned workers = 0;
  /// Errors are iid here, so the lag-0 eta estimator is the default.
  LrvConfig lrv{std::nullopt, true};
  /// Scales every critical value; > 1 makes the boundary harder to reach.
  double c_multiplier = 1.0;

  std::size_t monitoring_horizon() const;
  /// Mean regressor vector (1, d2, ..., d2).
  std::vector<double> regressor_mean() const;
  /// d^T Delta for the configured change (0 without one).
  double drift() const;
  void validate() const;
};

/// m training rows followed by monitoring_horizon() monitoring rows. Errors
/// are iid N(0, error_sigma2); regressors 2..p are independent GARCH series.
std::vector<Observation> generate_dataset(const ExperimentSpec& spec, Rng& rng);
std::vector<Observation> generate_dataset(const ExperimentSpec& spec, std::uint64_t seed);

/// min, quartiles by linear interpolation between order statistics, max.
struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

FiveNumberSummary five_number_summary(std::span<const double> sample);
/// Linearly interpolated quantile (position (n-1) prob in the sorted sample).
double interpolated_quantile(std::span<const double> sorted, double prob);

struct DetectorOutcome {
  DetectorKind kind = DetectorKind::PageTwoSided;
  CriticalValue critical;
  std::size_t reps = 0;
  /// Replications stopping within the horizon.
  std::size_t alarms = 0;
  /// Stops before the change (only counted when a change is configured).
  std::size_t false_alarms = 0;
  std::size_t no_alarm = 0;
  /// tau - k* over replications with k* <= tau <= N.
  std::vector<double> delays;
  /// Stopping k per replication, empty when no alarm within N.
  std::vector<std::optional<std::size_t>> stopping_times;

  double size() const noexcept { return reps ? static_cast<double>(alarms) / static_cast<double>(reps) : 0.0; }
  std::optional<FiveNumberSummary> delay_summary() const;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::size_t horizon = 0;
  std::vector<DetectorOutcome> outcomes;

  const DetectorOutcome& at(DetectorKind kind) const;
};

/// Runs every configured detector on the same simulated replications.
/// Replication r uses make_stream(master_seed, r), so the report is
/// identical for any worker count.
ExperimentReport run_experiment(const ExperimentSpec& spec,
                                const CriticalValueTable& table = CriticalValueTable::bundled());

/// Requires no change in the spec.
ExperimentReport run_size_experiment(const ExperimentSpec& spec,
                                     const CriticalValueTable& table = CriticalValueTable::bundled());
/// Requires a change in the spec.
ExperimentReport run_delay_experiment(const ExperimentSpec& spec,
                                      const CriticalValueTable& table = CriticalValueTable::bundled());

/// For N(0, s2) errors Var(e^2) = 2 s2^2; true when that equals s2, i.e. the
/// residual and squared-residual scales coincide.
bool sigma_equals_eta(double error_sigma2) noexcept;

}  // namespace pagecusum
