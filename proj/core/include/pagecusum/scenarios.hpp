#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pagecusum/simulation.hpp"

namespace pagecusum {

inline constexpr std::size_t kDeskSizeReps = 1000;
inline constexpr std::size_t kDeskDelayReps = 500;

/// Published figure a scenario can be compared against.
struct ReferenceValue {
  std::optional<double> size;
  std::optional<FiveNumberSummary> delay;
};

/// A named, fully specified reproduction run.
///
/// Names:
///   table3-m<m>-gamma<g>[-a<a>][-<QP|QPu>]            empirical size, residual Page
///   table4-m<m>-gamma<g>[-a<a>][-<SP|SRabs|SPu|SR>]   empirical size, squared residuals
///   table<6|7|8>-m<200|1000>-gamma<g>[-<det>][-median]
///                                                 delays under H1, k* = 1, m, 5m
///   table9-kstar<1|m|5m>[-<det>][-median]         delays under H2, m = 1000, gamma = 0
///   h2-residual-detectors, h2-squared-detectors   detection under an orthogonal change
/// where <m> is 100, 200, 500 or 1000, <g> is 0, 025 or 049 and <a> is 05 (default) or 10.
/// Omitting the detector runs every detector of the table.
struct Scenario {
  std::string name;
  std::string description;
  ExperimentSpec spec;
  std::vector<std::pair<DetectorKind, ReferenceValue>> reference;
  /// Compare only the median of the delay summary.
  bool median_only = false;

  std::optional<ReferenceValue> reference_for(DetectorKind kind) const;
};

/// Throws UnknownScenario.
Scenario make_scenario(std::string_view name);

/// Every name make_scenario accepts without optional suffixes.
std::vector<std::string> scenario_names();

/// H1 shifts the slope (d^T Delta > 0); H2 is orthogonal to d = (1, 1).
std::vector<double> h1_delta();
std::vector<double> h2_delta();

}  // namespace pagecusum
