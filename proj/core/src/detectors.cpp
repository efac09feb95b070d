#include "pagecusum/detectors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "pagecusum/error.hpp"

namespace pagecusum {

bool is_squared(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::SqCusumAbs:
    case DetectorKind::SqCusumRaw:
    case DetectorKind::SqPageTwoSided:
    case DetectorKind::SqPageUp:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::CusumAbs: return "CUSUM_ABS";
    case DetectorKind::CusumRaw: return "CUSUM_RAW";
    case DetectorKind::PageTwoSided: return "PAGE_TWO_SIDED";
    case DetectorKind::PageUp: return "PAGE_UP";
    case DetectorKind::PageDown: return "PAGE_DOWN";
    case DetectorKind::SqCusumAbs: return "SQ_CUSUM_ABS";
    case DetectorKind::SqCusumRaw: return "SQ_CUSUM_RAW";
    case DetectorKind::SqPageTwoSided: return "SQ_PAGE_TWO_SIDED";
    case DetectorKind::SqPageUp: return "SQ_PAGE_UP";
  }
  return "?";
}

std::string_view short_name(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::CusumAbs: return "Qabs";
    case DetectorKind::CusumRaw: return "Qu";
    case DetectorKind::PageTwoSided: return "QP";
    case DetectorKind::PageUp: return "QPu";
    case DetectorKind::PageDown: return "QPd";
    case DetectorKind::SqCusumAbs: return "SRabs";
    case DetectorKind::SqCusumRaw: return "SR";
    case DetectorKind::SqPageTwoSided: return "SP";
    case DetectorKind::SqPageUp: return "SPu";
  }
  return "?";
}

namespace {

std::string normalize(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (ch == '-' || ch == '_') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

std::string_view kebab_name(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::CusumAbs: return "cusum";
    case DetectorKind::CusumRaw: return "cusum-up";
    case DetectorKind::PageTwoSided: return "page";
    case DetectorKind::PageUp: return "page-up";
    case DetectorKind::PageDown: return "page-down";
    case DetectorKind::SqCusumAbs: return "sq-cusum";
    case DetectorKind::SqCusumRaw: return "sq-cusum-up";
    case DetectorKind::SqPageTwoSided: return "sq-page";
    case DetectorKind::SqPageUp: return "sq-page-up";
  }
  return "?";
}

}  // namespace

DetectorKind parse_detector(std::string_view name) {
  // Short labels are case sensitive ("SR" vs "Sr" never collide, but "QP" vs "Qu" would under folding).
  for (DetectorKind kind : kAllDetectors) {
    if (name == short_name(kind)) return kind;
  }
  const std::string key = normalize(name);
  for (DetectorKind kind : kAllDetectors) {
    if (key == normalize(to_string(kind)) || key == normalize(kebab_name(kind))) return kind;
  }
  fail(ErrorCode::InvalidArgument, "unknown detector '" + std::string(name) + "'");
}

void BoundaryParams::validate() const {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    fail(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 0.5), got " + std::to_string(gamma));
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::InvalidArgument, "critical value must be positive, got " + std::to_string(c));
  }
  if (m < 1) fail(ErrorCode::InvalidArgument, "training length must be at least 1");
}

double boundary_g(std::size_t m, std::size_t k, double gamma) {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    fail(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 0.5), got " + std::to_string(gamma));
  }
  if (m < 1) fail(ErrorCode::InvalidArgument, "training length must be at least 1");
  const double md = static_cast<double>(m);
  const double kd = static_cast<double>(k);
  const double tilt = gamma == 0.0 ? 1.0 : std::pow(kd / (kd + md), gamma);
  return std::sqrt(md) * (1.0 + kd / md) * tilt;
}

std::vector<double> boundary_curve(std::size_t m, std::size_t n, double gamma) {
  std::vector<double> g(n);
  for (std::size_t k = 1; k <= n; ++k) g[k - 1] = boundary_g(m, k, gamma);
  return g;
}

double detector_value(DetectorKind kind, double q, double q_min, double q_max) noexcept {
  switch (kind) {
    case DetectorKind::CusumAbs:
    case DetectorKind::SqCusumAbs:
      return std::abs(q);
    case DetectorKind::CusumRaw:
    case DetectorKind::SqCusumRaw:
      return q;
    case DetectorKind::PageUp:
    case DetectorKind::SqPageUp:
      return q - q_min;
    case DetectorKind::PageDown:
      return q_max - q;
    case DetectorKind::PageTwoSided:
    case DetectorKind::SqPageTwoSided:
      return std::max(q - q_min, q_max - q);
  }
  return 0.0;
}

MonitorConfig make_config(DetectorKind kind, const RegressionFit& fit, const BoundaryParams& bp, bool strict) {
  bp.validate();
  MonitorConfig cfg;
  cfg.kind = kind;
  cfg.boundary = bp;
  cfg.strict = strict;
  if (is_squared(kind)) {
    cfg.scale = fit.eta_hat;
    cfg.centering = fit.mean_sq_train_residual;
  } else {
    cfg.scale = fit.sigma_hat;
  }
  return cfg;
}

void advance(MonitorState& state, const MonitorConfig& cfg, double residual, double g) {
  if (state.alarm) {
    if (cfg.strict) {
      fail(ErrorCode::AlarmAlreadyRaised, "monitor already stopped at k=" + std::to_string(state.alarm->k));
    }
    state.post_alarm = true;
  }
  ++state.k;
  state.q += is_squared(cfg.kind) ? residual * residual - cfg.centering : residual;
  state.q_min = std::min(state.q_min, state.q);
  state.q_max = std::max(state.q_max, state.q);
  state.value = detector_value(cfg.kind, state.q, state.q_min, state.q_max);

  const double threshold = cfg.scale * cfg.boundary.c * g;
  if (!state.alarm && state.value > threshold) {
    state.alarm = Alarm{state.k, state.value, threshold};
  }
}

void advance(MonitorState& state, const MonitorConfig& cfg, double residual) {
  advance(state, cfg, residual, boundary_g(cfg.boundary.m, state.k + 1, cfg.boundary.gamma));
}

MonitorState update(MonitorState state, DetectorKind kind, const RegressionFit& fit, const Observation& obs,
                    const BoundaryParams& bp, bool strict) {
  advance(state, make_config(kind, fit, bp, strict), residual(fit, obs));
  return state;
}

Monitor::Monitor(DetectorKind kind, const RegressionFit& fit, const BoundaryParams& bp, bool strict)
    : cfg_(make_config(kind, fit, bp, strict)), beta_(fit.beta_hat) {}

Monitor::Monitor(MonitorConfig cfg) : cfg_(cfg) { cfg_.boundary.validate(); }

bool Monitor::observe(const Observation& obs) {
  if (beta_.empty()) fail(ErrorCode::InvalidArgument, "monitor was built without a regression fit");
  return observe_residual(residuals(beta_, std::span(&obs, 1)).front());
}

bool Monitor::observe_residual(double residual) {
  const bool before = alarmed();
  advance(state_, cfg_, residual);
  return !before && alarmed();
}

StoppingReport run_monitor_residuals(std::span<const double> residuals, const MonitorConfig& cfg,
                                     const RunOptions& opts, std::span<const double> g_curve) {
  cfg.boundary.validate();
  std::size_t n = residuals.size();
  if (opts.horizon) n = std::min(n, *opts.horizon);
  if (!g_curve.empty() && g_curve.size() < n) {
    fail(ErrorCode::InvalidArgument, "boundary curve shorter than the monitored stream");
  }

  StoppingReport report;
  report.kind = cfg.kind;
  MonitorState state;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = g_curve.empty() ? boundary_g(cfg.boundary.m, i + 1, cfg.boundary.gamma) : g_curve[i];
    advance(state, cfg, residuals[i], g);
    if (opts.record_trajectory) {
      report.detector_path.push_back(state.value);
      report.boundary_path.push_back(cfg.scale * cfg.boundary.c * g);
    }
    if (state.alarm) break;
  }
  report.alarm = state.alarm;
  report.last_k = state.k;
  return report;
}

StoppingReport run_monitor(const RegressionFit& fit, std::span<const Observation> stream, DetectorKind kind,
                           const BoundaryParams& bp, const RunOptions& opts) {
  std::size_t n = stream.size();
  if (opts.horizon) n = std::min(n, *opts.horizon);
  const std::vector<double> e = residuals(fit.beta_hat, stream.first(n));
  return run_monitor_residuals(e, make_config(kind, fit, bp), opts);
}

}  // namespace pagecusum
