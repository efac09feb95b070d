#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pagecusum/model.hpp"
#include "pagecusum/retrospective.hpp"
#include "pagecusum/scenarios.hpp"
#include "pagecusum/simulation.hpp"

namespace pagecusum {

/// Rows of a data file. The header is `y,<x2>,...,<xp>`; the intercept column
/// is implicit and never stored.
struct Dataset {
  std::vector<std::string> regressor_names;
  std::vector<Observation> rows;
};

/// Throws MalformedCsv naming the offending line.
Dataset read_dataset(std::istream& in, std::string_view source = "<input>");
Dataset read_dataset(const std::filesystem::path& path);

/// Writes with 17 significant digits so a read returns identical values.
void write_dataset(std::ostream& out, std::span<const Observation> rows,
                   std::span<const std::string> regressor_names = {});

/// One row per detector: sizes, delay summaries and, when the scenario has
/// a published value, a reference column beside each statistic.
void write_experiment_csv(std::ostream& out, const ExperimentReport& report, const Scenario* scenario = nullptr);
void write_experiment_text(std::ostream& out, const ExperimentReport& report, const Scenario* scenario = nullptr);

/// One delay per line, for external density plots.
void write_delay_samples(std::ostream& out, const DetectorOutcome& outcome);

/// segment,start,end,beta_1..beta_p,sigma_hat
void write_segment_csv(std::ostream& out, const SegmentReport& report,
                       std::span<const std::string> regressor_names = {});

/// Formats a double with up to 17 significant digits, shortest round-trip first.
std::string format_double(double v);

}  // namespace pagecusum
