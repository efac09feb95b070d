#include "pagecusum/detectors.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pagecusum/error.hpp"
#include "pagecusum/simulation.hpp"

namespace pagecusum {
namespace {

MonitorConfig unit_config(DetectorKind kind, double c = 1e9, double centering = 0.0) {
  MonitorConfig cfg;
  cfg.kind = kind;
  cfg.scale = 1.0;
  cfg.centering = centering;
  cfg.boundary = BoundaryParams{0.0, c, 100};
  return cfg;
}

std::vector<double> values(DetectorKind kind, std::span<const double> residuals, double centering = 0.0) {
  const auto cfg = unit_config(kind, 1e9, centering);
  MonitorState state;
  std::vector<double> out;
  for (double e : residuals) {
    advance(state, cfg, e);
    out.push_back(state.value);
  }
  return out;
}

std::vector<double> normals(std::size_t n, std::mt19937_64& rng, double sd = 1.0) {
  std::normal_distribution<double> z(0.0, sd);
  std::vector<double> out(n);
  for (auto& v : out) v = z(rng);
  return out;
}

TEST(BoundaryG, Examples) {
  EXPECT_DOUBLE_EQ(boundary_g(100, 100, 0.0), 20.0);
  EXPECT_DOUBLE_EQ(boundary_g(100, 0, 0.25), 0.0);
  EXPECT_DOUBLE_EQ(boundary_g(100, 0, 0.0), 10.0);
  EXPECT_NEAR(boundary_g(100, 300, 0.25), 37.224194364, 1e-8);
}

TEST(BoundaryG, GammaRange) {
  EXPECT_THROW(boundary_g(100, 1, 0.5), Error);
  EXPECT_THROW(boundary_g(100, 1, -0.01), Error);
  EXPECT_NO_THROW(boundary_g(100, 1, 0.49));
}

TEST(BoundaryG, NondecreasingInK) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> m_dist(1, 2000);
  std::uniform_real_distribution<double> g_dist(0.0, 0.4999);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = m_dist(rng);
    const double gamma = g_dist(rng);
    double prev = boundary_g(m, 0, gamma);
    for (std::size_t k = 1; k <= 3 * m; ++k) {
      const double g = boundary_g(m, k, gamma);
      ASSERT_GE(g, prev);
      prev = g;
    }
  }
}

TEST(Detectors, PageExamples) {
  const std::vector<double> e = {1.0, -2.0, 0.5};
  EXPECT_EQ(values(DetectorKind::PageTwoSided, e), (std::vector<double>{1.0, 2.0, 1.5}));
  EXPECT_EQ(values(DetectorKind::PageUp, e), (std::vector<double>{1.0, 0.0, 0.5}));
  EXPECT_EQ(values(DetectorKind::PageDown, e), (std::vector<double>{0.0, 2.0, 1.5}));
  EXPECT_EQ(values(DetectorKind::CusumRaw, e), (std::vector<double>{1.0, -1.0, -0.5}));
  EXPECT_EQ(values(DetectorKind::CusumAbs, e), (std::vector<double>{1.0, 1.0, 0.5}));
}

TEST(Detectors, SquaredExample) {
  const std::vector<double> e = {std::sqrt(2.0), 0.0};
  const auto sr = values(DetectorKind::SqCusumRaw, e, 1.0);
  EXPECT_NEAR(sr[0], 1.0, 1e-15);
  EXPECT_NEAR(sr[1], 0.0, 1e-15);
  const auto sp = values(DetectorKind::SqPageTwoSided, e, 1.0);
  EXPECT_NEAR(sp[0], 1.0, 1e-15);
  EXPECT_NEAR(sp[1], 1.0, 1e-15);
}

TEST(Detectors, SquaredCenteringUsesTrainingMean) {
  std::vector<Observation> train;
  for (double y : {1.0, -1.0, 3.0, -3.0}) train.push_back(Observation{y, {1.0}});
  const auto fit = fit_ols(train);
  EXPECT_DOUBLE_EQ(fit.mean_sq_train_residual, 5.0);
  const auto cfg = make_config(DetectorKind::SqCusumRaw, fit, BoundaryParams{0.0, 1.0, 4});
  EXPECT_DOUBLE_EQ(cfg.centering, 5.0);
  EXPECT_DOUBLE_EQ(cfg.scale, fit.eta_hat);
  EXPECT_DOUBLE_EQ(make_config(DetectorKind::PageTwoSided, fit, BoundaryParams{0.0, 1.0, 4}).scale, fit.sigma_hat);
}

TEST(Detectors, ZeroStreamNeverAlarms) {
  for (auto kind : kAllDetectors) {
    MonitorConfig cfg = unit_config(kind, 1e-6, 0.0);
    MonitorState state;
    for (int i = 0; i < 1000; ++i) advance(state, cfg, 0.0);
    EXPECT_EQ(state.value, 0.0);
    EXPECT_FALSE(state.alarm) << to_string(kind);
  }
}

TEST(Detectors, RecursionMatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> len(1, 300);
  for (int trial = 0; trial < 100; ++trial) {
    const auto e = normals(len(rng), rng, 0.5 + trial % 3);
    for (auto kind : kAllDetectors) {
      const double centering = is_squared(kind) ? 0.9 : 0.0;
      const auto fast = values(kind, e, centering);
      const auto slow = oracle::detector_path(kind, e, centering);
      for (std::size_t k = 0; k < e.size(); ++k) {
        ASSERT_NEAR(fast[k], slow[k], 1e-9 * std::max(1.0, std::abs(slow[k]))) << to_string(kind) << " k=" << k + 1;
      }
    }
  }
}

TEST(Detectors, StateInvariants) {
  std::mt19937_64 rng(3);
  const auto e = normals(500, rng);
  const auto cfg = unit_config(DetectorKind::PageTwoSided);
  MonitorState state;
  for (double v : e) {
    advance(state, cfg, v);
    ASSERT_LE(state.q_min, 0.0);
    ASSERT_GE(state.q_max, 0.0);
    ASSERT_LE(state.q_min, state.q);
    ASSERT_LE(state.q, state.q_max);
  }
}

TEST(Detectors, Dominance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = normals(400, rng);
    const auto two = values(DetectorKind::PageTwoSided, e);
    const auto up = values(DetectorKind::PageUp, e);
    const auto down = values(DetectorKind::PageDown, e);
    const auto raw = values(DetectorKind::CusumRaw, e);
    const auto abs = values(DetectorKind::CusumAbs, e);
    for (std::size_t k = 0; k < e.size(); ++k) {
      ASSERT_EQ(two[k], std::max(up[k], down[k]));
      ASSERT_LE(raw[k], up[k]);
      ASSERT_LE(abs[k], two[k]);
    }
  }
}

TEST(Detectors, StrictInequalityAtBoundary) {
  MonitorConfig cfg;
  cfg.kind = DetectorKind::CusumAbs;
  cfg.scale = 1.0;
  cfg.boundary = BoundaryParams{0.0, 1.0, 1};
  MonitorState tie;
  advance(tie, cfg, 2.0);  // g(1,1) = 2
  EXPECT_FALSE(tie.alarm);
  MonitorState above;
  advance(above, cfg, std::nextafter(2.0, 3.0));
  ASSERT_TRUE(above.alarm);
  EXPECT_EQ(above.alarm->k, 1u);
  EXPECT_DOUBLE_EQ(above.alarm->boundary_value, 2.0);
}

TEST(Detectors, AlarmIsFrozenAndPostAlarmFlagged) {
  auto cfg = unit_config(DetectorKind::PageUp, 0.05);
  MonitorState state;
  advance(state, cfg, 10.0);
  ASSERT_TRUE(state.alarm);
  const Alarm first = *state.alarm;
  EXPECT_FALSE(state.post_alarm);
  advance(state, cfg, 50.0);
  EXPECT_TRUE(state.post_alarm);
  EXPECT_EQ(state.alarm->k, first.k);
  EXPECT_EQ(state.alarm->detector_value, first.detector_value);
  EXPECT_EQ(state.k, 2u);

  cfg.strict = true;
  try {
    advance(state, cfg, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlarmAlreadyRaised);
  }
}

TEST(Detectors, ScaleEquivariance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto e = normals(600, rng);
    for (std::size_t i = 300; i < e.size(); ++i) e[i] += 0.4;
    for (auto kind : kAllDetectors) {
      MonitorConfig cfg;
      cfg.kind = kind;
      cfg.scale = 1.0;
      cfg.centering = 1.0;
      cfg.boundary = BoundaryParams{0.25, 1.5, 100};
      const auto base = run_monitor_residuals(e, cfg);
      const double lambda = 3.7;
      std::vector<double> scaled = e;
      for (auto& v : scaled) v *= lambda;
      MonitorConfig scfg = cfg;
      if (is_squared(kind)) {
        scfg.scale = lambda * lambda;
        scfg.centering = lambda * lambda;
      } else {
        scfg.scale = lambda;
      }
      const auto other = run_monitor_residuals(scaled, scfg);
      ASSERT_EQ(base.alarmed(), other.alarmed());
      if (base.alarm) {
        ASSERT_EQ(base.alarm->k, other.alarm->k) << to_string(kind);
      }
    }
  }
}

TEST(RunMonitor, ImmediateCrossing) {
  RegressionFit fit;
  fit.beta_hat = {0.0};
  fit.p = 1;
  fit.m = 100;
  fit.sigma_hat = 1.0;
  std::vector<Observation> stream(20, Observation{10.0, {1.0}});
  const auto report = run_monitor(fit, stream, DetectorKind::PageTwoSided, BoundaryParams{0.0, 0.1, 100});
  ASSERT_TRUE(report.alarmed());
  EXPECT_EQ(report.alarm->k, 1u);
  EXPECT_EQ(report.last_k, 1u);
}

TEST(RunMonitor, InflatedBoundaryNeverCrossesUnderNull) {
  ExperimentSpec spec;
  spec.m = 100;
  const auto data = generate_dataset(spec, 5);
  const std::span<const Observation> rows(data);
  const auto fit = fit_ols(rows.first(spec.m));
  const auto report =
      run_monitor(fit, rows.subspan(spec.m), DetectorKind::PageTwoSided, BoundaryParams{0.0, 2.2599 * 100, 100});
  EXPECT_FALSE(report.alarmed());
  EXPECT_EQ(report.last_k, 5 * spec.m);
}

TEST(RunMonitor, AlarmMatchesFullTrajectoryScan) {
  ExperimentSpec spec;
  spec.m = 100;
  spec.change = ChangeSpec{1, {1.0, 0.0}};
  spec.horizon = 500;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto data = generate_dataset(spec, seed);
    const std::span<const Observation> rows(data);
    const auto fit = fit_ols(rows.first(spec.m));
    const auto stream = rows.subspan(spec.m);
    const auto e = residuals(fit.beta_hat, stream);
    for (auto kind : kAllDetectors) {
      const BoundaryParams bp{0.25, 2.0, spec.m};
      const auto report = run_monitor(fit, stream, kind, bp, RunOptions{std::nullopt, true});
      const double scale = is_squared(kind) ? fit.eta_hat : fit.sigma_hat;
      const auto path = oracle::detector_path(kind, e, is_squared(kind) ? fit.mean_sq_train_residual : 0.0);
      std::optional<std::size_t> expected;
      for (std::size_t k = 1; k <= path.size(); ++k) {
        if (path[k - 1] > scale * bp.c * boundary_g(spec.m, k, bp.gamma)) {
          expected = k;
          break;
        }
      }
      ASSERT_EQ(report.alarmed(), expected.has_value()) << to_string(kind);
      if (expected) {
        EXPECT_EQ(report.alarm->k, *expected) << to_string(kind);
        EXPECT_EQ(report.detector_path.size(), *expected);
      }
    }
  }
}

TEST(RunMonitor, HorizonTruncates) {
  std::vector<double> e(50, 0.0);
  const auto report = run_monitor_residuals(e, unit_config(DetectorKind::PageUp), RunOptions{20, false});
  EXPECT_FALSE(report.alarmed());
  EXPECT_EQ(report.last_k, 20u);
}

TEST(MonitorClass, ObserveMatchesUpdate) {
  RegressionFit fit;
  fit.beta_hat = {1.0, 1.0};
  fit.p = 2;
  fit.m = 50;
  fit.sigma_hat = 0.7;
  const BoundaryParams bp{0.0, 1.5, 50};
  Monitor monitor(DetectorKind::PageTwoSided, fit, bp);
  MonitorState state;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> z;
  for (int i = 0; i < 300; ++i) {
    const double x = 1.0 + z(rng);
    const Observation obs{1.0 + x + (i > 100 ? 2.0 : 0.0) + 0.7 * z(rng), {1.0, x}};
    const bool raised = monitor.observe(obs);
    const bool before = state.alarm.has_value();
    state = update(state, DetectorKind::PageTwoSided, fit, obs, bp);
    EXPECT_EQ(raised, !before && state.alarm.has_value());
    EXPECT_EQ(monitor.state().value, state.value);
  }
  EXPECT_TRUE(monitor.alarmed());
  EXPECT_THROW(update(MonitorState{}, DetectorKind::PageUp, fit, Observation{1.0, {1.0}}, bp), Error);
}

TEST(DetectorNames, RoundTrip) {
  for (auto kind : kAllDetectors) {
    EXPECT_EQ(parse_detector(to_string(kind)), kind);
    EXPECT_EQ(parse_detector(short_name(kind)), kind);
  }
  EXPECT_EQ(parse_detector("page"), DetectorKind::PageTwoSided);
  EXPECT_EQ(parse_detector("sq-page-up"), DetectorKind::SqPageUp);
  EXPECT_THROW(parse_detector("mosum"), Error);
}

}  // namespace
}  // namespace pagecusum
