#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pagecusum/critical_values.hpp"
#include "pagecusum/detectors.hpp"

namespace pagecusum::cli {

inline constexpr int kExitNoAlarm = 0;
inline constexpr int kExitAlarm = 10;
inline constexpr int kExitError = 1;

using Path = std::filesystem::path;

/// Bundled table, overridden entry by entry by `file` when given.
CriticalValueTable load_table(const std::optional<Path>& file);

struct MonitorArgs {
  Path data;
  std::size_t m = 0;
  double gamma = 0.0;
  double alpha = 0.05;
  std::vector<std::string> detectors = {"QP"};
  std::optional<Path> table_file;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> bandwidth;
  bool independent_errors = false;
  double c_multiplier = 1.0;
  /// CSV report; the text report always goes to `out`.
  std::optional<Path> report;
  /// One k,detector,boundary file per detector.
  std::optional<Path> trajectory_dir;
};

struct MonitorRow {
  DetectorKind kind = DetectorKind::PageTwoSided;
  CriticalValue critical;
  double scale = 0.0;
  StoppingReport stop;
};

/// Fits on the first m rows and monitors the rest with every detector.
/// Throws MissingMonitoringData when no row follows the training sample and
/// MissingCriticalValue when the table has no entry for (gamma, alpha).
std::vector<MonitorRow> monitor_file(const MonitorArgs& args);
int cmd_monitor(const MonitorArgs& args, std::ostream& out);

struct BuildTablesArgs {
  std::vector<std::string> functionals;  // empty = all
  std::vector<double> gammas = {0.0, 0.15, 0.25, 0.35, 0.45, 0.49};
  std::vector<double> alphas = {0.01, 0.025, 0.05, 0.10, 0.25};
  std::size_t reps = 20'000;
  std::size_t grid = 10'000;
  std::uint64_t seed = 20'140'101;
  unsigned workers = 0;
  /// Use the series solutions for gamma = 0 ordinary CUSUM entries.
  bool closed_form = true;
  Path output = "critical_values.csv";
};

CriticalValueTable build_tables(const BuildTablesArgs& args, std::ostream& log);
/// Extends `output` if it exists, otherwise creates it.
int cmd_build_tables(const BuildTablesArgs& args, std::ostream& out);

struct ReproduceArgs {
  std::string scenario;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
  std::optional<Path> table_file;
  std::optional<Path> report;
  std::optional<Path> delays_dir;
};

int cmd_reproduce(const ReproduceArgs& args, std::ostream& out, std::ostream& err);
void list_scenarios(std::ostream& out);

struct ExperimentArgs {
  Path config;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<Path> table_file;
  std::optional<Path> report;
  std::optional<Path> delays_dir;
};

int cmd_experiment(const ExperimentArgs& args, std::ostream& out);

struct SimulateArgs {
  Path config;
  std::optional<std::uint64_t> seed;
  std::optional<Path> output;
};

/// Writes one synthetic dataset (training + monitoring rows) as CSV.
int cmd_simulate(const SimulateArgs& args, std::ostream& out);

struct RetrospectiveArgs {
  Path data;
  std::optional<std::size_t> n;
  bool squared = false;
  std::optional<std::size_t> bandwidth;
  bool independent_errors = false;
  std::optional<Path> output;
};

int cmd_retrospective(const RetrospectiveArgs& args, std::ostream& out);

struct LookupArgs {
  std::string name;  // functional or detector
  double gamma = 0.0;
  double alpha = 0.05;
  std::optional<Path> table_file;
  bool all = false;  // dump the whole table instead
};

int cmd_lookup(const LookupArgs& args, std::ostream& out);

/// Parses argv and dispatches. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pagecusum::cli
