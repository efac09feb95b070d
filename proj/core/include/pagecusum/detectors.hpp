#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pagecusum/model.hpp"

namespace pagecusum {

/// Residual detectors accumulate e_{m+k}; squared detectors accumulate
/// e_{m+k}^2 minus the training mean of e^2. Page variants take the range
/// of the accumulator against its running extrema.
enum class DetectorKind {
  CusumAbs,        // |Q(m,k)|
  CusumRaw,        // Q(m,k)
  PageTwoSided,    // max_i |Q(m,k) - Q(m,i)|
  PageUp,          // Q(m,k) - min_i Q(m,i)
  PageDown,        // max_i Q(m,k) - Q(m,k)
  SqCusumAbs,      // |S_R(m,k)|
  SqCusumRaw,      // S_R(m,k)
  SqPageTwoSided,  // max_i |S_R(m,k) - S_R(m,i)|
  SqPageUp,        // S_R(m,k) - min_i S_R(m,i)
};

inline constexpr std::array kAllDetectors = {
    DetectorKind::CusumAbs,     DetectorKind::CusumRaw,   DetectorKind::PageTwoSided,
    DetectorKind::PageUp,       DetectorKind::PageDown,   DetectorKind::SqCusumAbs,
    DetectorKind::SqCusumRaw,   DetectorKind::SqPageTwoSided, DetectorKind::SqPageUp,
};

bool is_squared(DetectorKind kind) noexcept;
/// Canonical upper-case name, e.g. "PAGE_TWO_SIDED".
std::string_view to_string(DetectorKind kind) noexcept;
/// Compact label used in reports and scenario names, e.g. "QP", "SRabs".
std::string_view short_name(DetectorKind kind) noexcept;
/// Accepts canonical names, short labels and kebab-case aliases ("page-up").
DetectorKind parse_detector(std::string_view name);

struct BoundaryParams {
  double gamma = 0.0;
  double c = 1.0;
  std::size_t m = 1;

  /// Throws GammaOutOfRange or InvalidArgument.
  void validate() const;
};

/// g(m,k) = sqrt(m) (1 + k/m) (k/(k+m))^gamma with 0^0 = 1.
double boundary_g(std::size_t m, std::size_t k, double gamma);

struct Alarm {
  std::size_t k = 0;
  double detector_value = 0.0;
  double boundary_value = 0.0;
};

/// O(1) streaming state. q is the cumulative statistic; q_min/q_max include
/// the k = 0 value 0, so q_min <= 0 <= q_max always holds.
struct MonitorState {
  std::size_t k = 0;
  double q = 0.0;
  double q_min = 0.0;
  double q_max = 0.0;
  double value = 0.0;
  std::optional<Alarm> alarm;
  /// Set once an update happens after the alarm (diagnostic continuation).
  bool post_alarm = false;
};

/// Detector value implied by the accumulator and its running extrema.
double detector_value(DetectorKind kind, double q, double q_min, double q_max) noexcept;

/// Everything an update needs besides the state.
struct MonitorConfig {
  DetectorKind kind = DetectorKind::PageTwoSided;
  /// sigma_hat for residual detectors, eta_hat for squared ones.
  double scale = 1.0;
  /// Subtracted from e^2 for squared detectors; ignored otherwise.
  double centering = 0.0;
  BoundaryParams boundary;
  /// Throw AlarmAlreadyRaised instead of continuing after an alarm.
  bool strict = false;
};

MonitorConfig make_config(DetectorKind kind, const RegressionFit& fit, const BoundaryParams& bp,
                          bool strict = false);

/// Feeds one residual. `g` must equal boundary_g(m, state.k + 1, gamma).
void advance(MonitorState& state, const MonitorConfig& cfg, double residual, double g);
void advance(MonitorState& state, const MonitorConfig& cfg, double residual);

/// Value-semantics update on a full observation.
MonitorState update(MonitorState state, DetectorKind kind, const RegressionFit& fit, const Observation& obs,
                    const BoundaryParams& bp, bool strict = false);

/// Owns a config and a state; the usual way to monitor a live stream.
class Monitor {
 public:
  Monitor(DetectorKind kind, const RegressionFit& fit, const BoundaryParams& bp, bool strict = false);
  explicit Monitor(MonitorConfig cfg);

  /// Returns true if this observation raised the alarm.
  bool observe(const Observation& obs);
  bool observe_residual(double residual);

  const MonitorState& state() const noexcept { return state_; }
  const MonitorConfig& config() const noexcept { return cfg_; }
  bool alarmed() const noexcept { return state_.alarm.has_value(); }

 private:
  MonitorConfig cfg_;
  std::vector<double> beta_;
  MonitorState state_;
};

struct RunOptions {
  /// Stop after this many monitoring observations (open-end when empty).
  std::optional<std::size_t> horizon;
  /// Keep detector and boundary values (scale * c * g) for every k.
  bool record_trajectory = false;
};

struct StoppingReport {
  DetectorKind kind = DetectorKind::PageTwoSided;
  std::optional<Alarm> alarm;
  /// Last k processed (the alarm k when stopped early).
  std::size_t last_k = 0;
  std::vector<double> detector_path;
  std::vector<double> boundary_path;

  bool alarmed() const noexcept { return alarm.has_value(); }
};

/// Monitors until the first crossing, the end of the stream or the horizon.
StoppingReport run_monitor(const RegressionFit& fit, std::span<const Observation> stream, DetectorKind kind,
                           const BoundaryParams& bp, const RunOptions& opts = {});

/// Same, on precomputed residuals. `g_curve`, when non-empty, supplies
/// g(m,k) at index k-1 and must cover the stream.
StoppingReport run_monitor_residuals(std::span<const double> residuals, const MonitorConfig& cfg,
                                     const RunOptions& opts = {}, std::span<const double> g_curve = {});

/// g(m,1..n) for reuse across many runs with the same m and gamma.
std::vector<double> boundary_curve(std::size_t m, std::size_t n, double gamma);

}  // namespace pagecusum
