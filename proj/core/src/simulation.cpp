#include "pagecusum/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pagecusum/error.hpp"
#include "parallel.hpp"

namespace pagecusum {

void GarchSpec::validate() const {
  if (!(omega > 0.0) || !(alpha >= 0.0) || !(beta >= 0.0) || !(alpha + beta < 1.0)) {
    fail(ErrorCode::NonstationarySpec, "GARCH(1,1) needs omega > 0, alpha, beta >= 0 and alpha + beta < 1");
  }
}

double GarchSpec::stationary_variance() const noexcept { return (omega + alpha) / (1.0 - beta); }

std::vector<double> generate_garch_regressors(const GarchSpec& spec, std::size_t n, Rng& rng) {
  spec.validate();
  std::normal_distribution<double> z_dist(0.0, 1.0);
  std::vector<double> x(n);
  double sigma2 = spec.stationary_variance();
  double z_prev = z_dist(rng);
  for (std::size_t i = 0; i < kGarchBurnIn + n; ++i) {
    sigma2 = spec.omega + spec.alpha * z_prev * z_prev + spec.beta * sigma2;
    const double z = z_dist(rng);
    if (i >= kGarchBurnIn) x[i - kGarchBurnIn] = spec.d2 + std::sqrt(sigma2) * z;
    z_prev = z;
  }
  return x;
}

std::vector<double> generate_garch_regressors(const GarchSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return generate_garch_regressors(spec, n, rng);
}

std::size_t ExperimentSpec::monitoring_horizon() const {
  if (horizon) return *horizon;
  return change ? change->k_star + 2000 : 5 * m;
}

std::vector<double> ExperimentSpec::regressor_mean() const {
  std::vector<double> d(p, garch.d2);
  d[0] = 1.0;
  return d;
}

double ExperimentSpec::drift() const {
  if (!change) return 0.0;
  const auto d = regressor_mean();
  double s = 0.0;
  for (std::size_t j = 0; j < p && j < change->delta.size(); ++j) s += d[j] * change->delta[j];
  return s;
}

void ExperimentSpec::validate() const {
  if (p < 1) fail(ErrorCode::InvalidArgument, "p must be at least 1");
  if (m <= p) fail(ErrorCode::DegenerateSample, "training length must exceed p");
  if (beta0.size() != p) fail(ErrorCode::DimensionMismatch, "beta0 must have p entries");
  if (!(error_sigma2 > 0.0)) fail(ErrorCode::InvalidArgument, "error variance must be positive");
  if (reps < 1) fail(ErrorCode::InvalidArgument, "reps must be at least 1");
  if (detectors.empty()) fail(ErrorCode::InvalidArgument, "no detectors configured");
  if (!(c_multiplier > 0.0)) fail(ErrorCode::InvalidArgument, "c multiplier must be positive");
  if (!(gamma >= 0.0 && gamma < 0.5)) fail(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 0.5)");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1)");
  if (p > 1) garch.validate();
  if (change) {
    if (change->k_star < 1) fail(ErrorCode::InvalidArgument, "k* must be at least 1");
    if (change->delta.size() != p) fail(ErrorCode::DimensionMismatch, "delta must have p entries");
    if (std::all_of(change->delta.begin(), change->delta.end(), [](double v) { return v == 0.0; })) {
      fail(ErrorCode::InvalidArgument, "delta must be nonzero under a change");
    }
  }
  if (monitoring_horizon() < 1) fail(ErrorCode::InvalidArgument, "horizon must be at least 1");
}

std::vector<Observation> generate_dataset(const ExperimentSpec& spec, Rng& rng) {
  spec.validate();
  const std::size_t n = spec.m + spec.monitoring_horizon();
  std::vector<std::vector<double>> columns;
  for (std::size_t j = 1; j < spec.p; ++j) columns.push_back(generate_garch_regressors(spec.garch, n, rng));

  std::normal_distribution<double> noise(0.0, std::sqrt(spec.error_sigma2));
  std::vector<double> beta_star = spec.beta0;
  if (spec.change) {
    for (std::size_t j = 0; j < spec.p; ++j) beta_star[j] += spec.change->delta[j];
  }
  // 0-based index of observation m + k*.
  const std::size_t change_at = spec.change ? spec.m + spec.change->k_star - 1 : n;

  std::vector<Observation> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    Observation& obs = rows[i];
    obs.x.resize(spec.p);
    obs.x[0] = 1.0;
    for (std::size_t j = 1; j < spec.p; ++j) obs.x[j] = columns[j - 1][i];
    const auto& beta = i >= change_at ? beta_star : spec.beta0;
    double mean = 0.0;
    for (std::size_t j = 0; j < spec.p; ++j) mean += obs.x[j] * beta[j];
    obs.y = mean + noise(rng);
  }
  return rows;
}

std::vector<Observation> generate_dataset(const ExperimentSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return generate_dataset(spec, rng);
}

double interpolated_quantile(std::span<const double> sorted, double prob) {
  if (sorted.empty()) fail(ErrorCode::InvalidArgument, "empty sample");
  const double pos = prob * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

FiveNumberSummary five_number_summary(std::span<const double> sample) {
  if (sample.empty()) fail(ErrorCode::InvalidArgument, "empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  return {sorted.front(), interpolated_quantile(sorted, 0.25), interpolated_quantile(sorted, 0.5),
          interpolated_quantile(sorted, 0.75), sorted.back()};
}

std::optional<FiveNumberSummary> DetectorOutcome::delay_summary() const {
  if (delays.empty()) return std::nullopt;
  return five_number_summary(delays);
}

const DetectorOutcome& ExperimentReport::at(DetectorKind kind) const {
  for (const auto& o : outcomes) {
    if (o.kind == kind) return o;
  }
  fail(ErrorCode::InvalidArgument, "detector " + std::string(to_string(kind)) + " not in report");
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const CriticalValueTable& table) {
  spec.validate();
  const std::size_t horizon = spec.monitoring_horizon();
  const std::vector<double> g_curve = boundary_curve(spec.m, horizon, spec.gamma);

  ExperimentReport report;
  report.spec = spec;
  report.horizon = horizon;
  for (DetectorKind kind : spec.detectors) {
    DetectorOutcome outcome;
    outcome.kind = kind;
    outcome.critical = critical_value_for(table, kind, spec.gamma, spec.alpha);
    outcome.reps = spec.reps;
    outcome.stopping_times.resize(spec.reps);
    report.outcomes.push_back(std::move(outcome));
  }

  const unsigned workers = std::min<unsigned>(resolve_workers(spec.workers), static_cast<unsigned>(spec.reps));
  auto work = [&](unsigned worker) {
    for (std::size_t r = worker; r < spec.reps; r += workers) {
      Rng rng = make_stream(spec.master_seed, r);
      const std::vector<Observation> data = generate_dataset(spec, rng);
      const std::span<const Observation> rows(data);
      const RegressionFit fit = fit_ols(rows.first(spec.m), spec.lrv);
      const std::vector<double> e = residuals(fit.beta_hat, rows.subspan(spec.m));
      for (auto& outcome : report.outcomes) {
        const BoundaryParams bp{spec.gamma, outcome.critical.c * spec.c_multiplier, spec.m};
        const StoppingReport stop =
            run_monitor_residuals(e, make_config(outcome.kind, fit, bp), RunOptions{horizon, false}, g_curve);
        if (stop.alarm) outcome.stopping_times[r] = stop.alarm->k;
      }
    }
  };
  detail::run_workers(workers, work);

  for (auto& outcome : report.outcomes) {
    for (const auto& tau : outcome.stopping_times) {
      if (!tau) {
        ++outcome.no_alarm;
        continue;
      }
      ++outcome.alarms;
      if (spec.change) {
        if (*tau < spec.change->k_star) {
          ++outcome.false_alarms;
        } else {
          outcome.delays.push_back(static_cast<double>(*tau - spec.change->k_star));
        }
      }
    }
  }
  return report;
}

ExperimentReport run_size_experiment(const ExperimentSpec& spec, const CriticalValueTable& table) {
  if (spec.change) fail(ErrorCode::InvalidArgument, "size experiments run without a change");
  return run_experiment(spec, table);
}

ExperimentReport run_delay_experiment(const ExperimentSpec& spec, const CriticalValueTable& table) {
  if (!spec.change) fail(ErrorCode::InvalidArgument, "delay experiments need a change");
  return run_experiment(spec, table);
}

bool sigma_equals_eta(double error_sigma2) noexcept {
  return std::abs(2.0 * error_sigma2 * error_sigma2 - error_sigma2) <= 1e-12 * error_sigma2;
}

}  // namespace pagecusum
