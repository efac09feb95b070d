#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "pagecusum/error.hpp"
#include "pagecusum/io.hpp"
#include "pagecusum/model.hpp"
#include "pagecusum/retrospective.hpp"
#include "pagecusum/scenarios.hpp"
#include "pagecusum/simulation.hpp"

namespace pagecusum::cli {

namespace {

std::ofstream open_output(const Path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path.string());
  return out;
}

std::string fixed(double v, const char* pattern = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::vector<std::string> regressor_names(std::size_t p) {
  std::vector<std::string> names;
  for (std::size_t j = 2; j <= p; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

void write_delays(const Path& dir, const std::string& stem, const ExperimentReport& report) {
  std::filesystem::create_directories(dir);
  for (const auto& outcome : report.outcomes) {
    auto out = open_output(dir / (stem + "-" + std::string(short_name(outcome.kind)) + ".txt"));
    write_delay_samples(out, outcome);
  }
}

}  // namespace

CriticalValueTable load_table(const std::optional<Path>& file) {
  CriticalValueTable table = CriticalValueTable::bundled();
  if (file) table.merge(CriticalValueTable::load(*file));
  return table;
}

std::vector<MonitorRow> monitor_file(const MonitorArgs& args) {
  const Dataset data = read_dataset(args.data);
  if (args.m == 0) fail(ErrorCode::InvalidArgument, "--m must be positive");
  if (data.rows.size() <= args.m) {
    fail(ErrorCode::MissingMonitoringData, args.data.string() + " has " + std::to_string(data.rows.size()) +
                                               " rows; monitoring needs more than m = " + std::to_string(args.m));
  }
  if (!(args.c_multiplier > 0.0)) fail(ErrorCode::InvalidArgument, "--c-multiplier must be positive");

  const LrvConfig lrv{args.bandwidth, args.independent_errors};
  const std::span<const Observation> rows(data.rows);
  const RegressionFit fit = fit_ols(rows.first(args.m), lrv);
  const auto stream = rows.subspan(args.m);
  const CriticalValueTable table = load_table(args.table_file);

  std::vector<MonitorRow> result;
  for (const auto& name : args.detectors) {
    MonitorRow row;
    row.kind = parse_detector(name);
    try {
      row.critical = critical_value_for(table, row.kind, args.gamma, args.alpha);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AlphaNotTabulated && e.code() != ErrorCode::OutOfHull) throw;
      fail(ErrorCode::MissingCriticalValue,
           "no critical value for " + std::string(to_string(limit_for(row.kind))) + " at gamma = " +
               format_double(args.gamma) + ", alpha = " + format_double(args.alpha) +
               " (build one with `pagecusum build-tables` and pass --table-file)");
    }
    const BoundaryParams bp{args.gamma, row.critical.c * args.c_multiplier, args.m};
    row.scale = is_squared(row.kind) ? fit.eta_hat : fit.sigma_hat;
    row.stop = run_monitor(fit, stream, row.kind, bp, RunOptions{args.horizon, args.trajectory_dir.has_value()});
    result.push_back(std::move(row));
  }
  return result;
}

int cmd_monitor(const MonitorArgs& args, std::ostream& out) {
  const auto rows = monitor_file(args);

  if (args.report) {
    auto csv = open_output(*args.report);
    csv << "detector,m,gamma,alpha,c,c_multiplier,provenance,scale,alarm,k,row,detector_value,boundary,last_k\n";
    for (const auto& r : rows) {
      csv << short_name(r.kind) << ',' << args.m << ',' << format_double(args.gamma) << ','
          << format_double(args.alpha) << ',' << format_double(r.critical.c) << ','
          << format_double(args.c_multiplier) << ',' << r.critical.provenance.to_string() << ','
          << format_double(r.scale) << ',' << (r.stop.alarmed() ? "true" : "false") << ',';
      if (r.stop.alarm) {
        csv << r.stop.alarm->k << ',' << args.m + r.stop.alarm->k << ',' << format_double(r.stop.alarm->detector_value)
            << ',' << format_double(r.stop.alarm->boundary_value);
      } else {
        csv << ",,,";
      }
      csv << ',' << r.stop.last_k << '\n';
    }
  }

  if (args.trajectory_dir) {
    for (const auto& r : rows) {
      auto traj = open_output(*args.trajectory_dir / (std::string(short_name(r.kind)) + ".csv"));
      traj << "k,detector,boundary\n";
      for (std::size_t i = 0; i < r.stop.detector_path.size(); ++i) {
        traj << i + 1 << ',' << format_double(r.stop.detector_path[i]) << ','
             << format_double(r.stop.boundary_path[i]) << '\n';
      }
    }
  }

  bool any = false;
  out << "m = " << args.m << ", gamma = " << format_double(args.gamma) << ", alpha = " << format_double(args.alpha)
      << "\n";
  for (const auto& r : rows) {
    out << "  " << std::string(short_name(r.kind)) << std::string(6 - std::min<std::size_t>(5, short_name(r.kind).size()), ' ');
    if (r.stop.alarm) {
      any = true;
      out << "alarm at k = " << r.stop.alarm->k << " (row " << args.m + r.stop.alarm->k
          << "), detector " << fixed(r.stop.alarm->detector_value) << " > boundary "
          << fixed(r.stop.alarm->boundary_value);
    } else {
      out << "no alarm through k = " << r.stop.last_k;
    }
    out << "; c = " << format_double(r.critical.c) << " [" << r.critical.provenance.to_string() << "]\n";
  }
  return any ? kExitAlarm : kExitNoAlarm;
}

CriticalValueTable build_tables(const BuildTablesArgs& args, std::ostream& log) {
  std::vector<LimitFunctional> functionals;
  if (args.functionals.empty()) {
    functionals.assign(kAllFunctionals.begin(), kAllFunctionals.end());
  } else {
    for (const auto& name : args.functionals) functionals.push_back(parse_functional(name));
  }
  if (args.gammas.empty() || args.alphas.empty()) fail(ErrorCode::InvalidArgument, "empty gamma or alpha list");
  for (double a : args.alphas) {
    if (!(a > 0.0 && a < 1.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1)");
  }

  CriticalValueTable table;
  std::vector<FunctionalSpec> specs;
  for (auto f : functionals) {
    for (double g : args.gammas) {
      const bool series = args.closed_form && g == 0.0 &&
                          (f == LimitFunctional::CusumAbs || f == LimitFunctional::CusumRaw);
      if (!series) {
        specs.push_back({f, g});
        continue;
      }
      for (double a : args.alphas) {
        const double c = f == LimitFunctional::CusumAbs ? invert_cdf_gamma0(a) : invert_cusum_raw_cdf_gamma0(a);
        table.set(f, g, a, c, Provenance::closed_form());
      }
    }
  }

  if (!specs.empty()) {
    log << "simulating " << specs.size() << " functional(s) on " << args.reps << " paths, G = " << args.grid
        << ", seed " << args.seed << "\n";
    const SimulationPlan plan{args.reps, args.grid, args.seed, args.workers};
    const auto samples = simulate_functional_samples(specs, plan);
    const auto provenance = Provenance::simulated(args.grid, args.reps, args.seed);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      for (double a : args.alphas) {
        table.set(specs[i].functional, specs[i].gamma, a, empirical_quantile(samples[i], a), provenance);
      }
    }
  }
  return table;
}

int cmd_build_tables(const BuildTablesArgs& args, std::ostream& out) {
  CriticalValueTable table;
  if (std::filesystem::exists(args.output)) table = CriticalValueTable::load(args.output);
  const CriticalValueTable fresh = build_tables(args, out);
  table.merge(fresh);
  table.save(args.output);
  out << "wrote " << fresh.size() << " entries (" << table.size() << " total) to " << args.output.string() << "\n";
  return 0;
}

void list_scenarios(std::ostream& out) {
  for (const auto& name : scenario_names()) out << name << "\n";
}

int cmd_reproduce(const ReproduceArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scenario = make_scenario(args.scenario);
  if (args.reps) scenario.spec.reps = *args.reps;
  if (args.seed) scenario.spec.master_seed = *args.seed;
  scenario.spec.workers = args.workers;
  if (!sigma_equals_eta(scenario.spec.error_sigma2)) {
    err << "warning: error variance " << format_double(scenario.spec.error_sigma2)
        << " gives sigma != eta; squared-detector results are not comparable to the reference\n";
  }
  const ExperimentReport report = run_experiment(scenario.spec, load_table(args.table_file));
  write_experiment_text(out, report, &scenario);
  if (args.report) {
    auto csv = open_output(*args.report);
    write_experiment_csv(csv, report, &scenario);
  }
  if (args.delays_dir) write_delays(*args.delays_dir, scenario.name, report);
  return 0;
}

int cmd_experiment(const ExperimentArgs& args, std::ostream& out) {
  ExperimentSpec spec = load_experiment_config(args.config);
  if (args.reps) spec.reps = *args.reps;
  if (args.seed) spec.master_seed = *args.seed;
  if (args.workers) spec.workers = *args.workers;
  const ExperimentReport report = run_experiment(spec, load_table(args.table_file));
  write_experiment_text(out, report);
  if (args.report) {
    auto csv = open_output(*args.report);
    write_experiment_csv(csv, report);
  }
  if (args.delays_dir) write_delays(*args.delays_dir, args.config.stem().string(), report);
  return 0;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  const ExperimentSpec spec = load_experiment_config(args.config);
  const auto rows = generate_dataset(spec, args.seed.value_or(spec.master_seed));
  const auto names = regressor_names(spec.p);
  if (args.output) {
    auto file = open_output(*args.output);
    write_dataset(file, rows, names);
  } else {
    write_dataset(out, rows, names);
  }
  return 0;
}

int cmd_retrospective(const RetrospectiveArgs& args, std::ostream& out) {
  const Dataset data = read_dataset(args.data);
  const std::size_t n = args.n.value_or(data.rows.size());
  if (n > data.rows.size()) {
    fail(ErrorCode::InvalidArgument, "--n exceeds the " + std::to_string(data.rows.size()) + " rows of the file");
  }
  const auto variant = args.squared ? RetrospectiveVariant::SquaredResiduals : RetrospectiveVariant::Residuals;
  const SegmentReport report =
      estimate_changepoint(data.rows, n, variant, LrvConfig{args.bandwidth, args.independent_errors});
  if (args.output) {
    auto file = open_output(*args.output);
    write_segment_csv(file, report, data.regressor_names);
    out << "k_hat = " << report.k_hat << " of n = " << report.n << (report.degenerate ? " (degenerate)" : "")
        << ", max |C| = " << format_double(report.max_abs_cusum) << "\n";
  } else {
    write_segment_csv(out, report, data.regressor_names);
  }
  return 0;
}

int cmd_lookup(const LookupArgs& args, std::ostream& out) {
  const CriticalValueTable table = load_table(args.table_file);
  if (args.all) {
    table.write(out);
    return 0;
  }
  if (args.name.empty()) fail(ErrorCode::InvalidArgument, "critical-value needs a name or --all");
  LimitFunctional f;
  try {
    f = parse_functional(args.name);
  } catch (const Error&) {
    f = limit_for(parse_detector(args.name));
  }
  const CriticalValue cv = table.lookup_entry(f, args.gamma, args.alpha);
  out << to_string(f) << ',' << format_double(args.gamma) << ',' << format_double(args.alpha) << ','
      << format_double(cv.c) << ',' << cv.provenance.to_string() << "\n";
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential change-point monitoring for linear regressions"};
  app.name("pagecusum");
  app.require_subcommand(1);

  MonitorArgs mon;
  auto* monitor = app.add_subcommand("monitor", "Fit on the first m rows of a CSV file and monitor the rest");
  monitor->add_option("data", mon.data, "CSV file with header y,x2,...,xp")->required()->check(CLI::ExistingFile);
  monitor->add_option("--m", mon.m, "Training sample size")->required();
  monitor->add_option("--gamma", mon.gamma, "Boundary exponent in [0, 0.5)")->capture_default_str();
  monitor->add_option("--alpha", mon.alpha, "Nominal level")->capture_default_str();
  monitor->add_option("--detector", mon.detectors, "Detectors (repeat or comma-separate)")
      ->delimiter(',')
      ->capture_default_str();
  monitor->add_option("--table-file", mon.table_file, "Critical values overriding the bundled table")
      ->check(CLI::ExistingFile);
  monitor->add_option("--horizon", mon.horizon, "Stop after this many monitoring rows");
  monitor->add_option("--bandwidth", mon.bandwidth, "Bartlett bandwidth for eta (default floor(m^(1/3)))");
  monitor->add_flag("--independent-errors", mon.independent_errors, "Estimate eta without autocovariances");
  monitor->add_option("--c-multiplier", mon.c_multiplier, "Scale every critical value")->capture_default_str();
  monitor->add_option("--report", mon.report, "Write a CSV report here");
  monitor->add_option("--trajectory-dir", mon.trajectory_dir, "Write detector and boundary paths here");

  BuildTablesArgs bt;
  auto* build = app.add_subcommand("build-tables", "Simulate critical values into a table file");
  build->add_option("--functional", bt.functionals, "Limit functionals (default all)")->delimiter(',');
  build->add_option("--gamma", bt.gammas, "Gamma list")->delimiter(',')->capture_default_str();
  build->add_option("--alpha", bt.alphas, "Alpha list")->delimiter(',')->capture_default_str();
  build->add_option("--reps", bt.reps, "Simulated paths")->capture_default_str();
  build->add_option("--grid", bt.grid, "Grid points per path")->capture_default_str();
  build->add_option("--seed", bt.seed, "Master seed")->capture_default_str();
  build->add_option("--workers", bt.workers, "Threads (0 = all)");
  build->add_flag("!--simulate-closed-form", bt.closed_form, "Simulate gamma = 0 CUSUM entries too");
  build->add_option("--table-file,-o", bt.output, "Table file to create or extend")->capture_default_str();

  ReproduceArgs rep;
  bool list = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run a named reproduction scenario");
  reproduce->add_option("scenario", rep.scenario, "Scenario name (see --list)");
  reproduce->add_flag("--list", list, "List scenario names");
  reproduce->add_option("--reps", rep.reps, "Replications");
  reproduce->add_option("--seed", rep.seed, "Master seed");
  reproduce->add_option("--workers", rep.workers, "Threads (0 = all)");
  reproduce->add_option("--table-file", rep.table_file, "Critical values overriding the bundled table")
      ->check(CLI::ExistingFile);
  reproduce->add_option("--report", rep.report, "Write a CSV report here");
  reproduce->add_option("--delays-dir", rep.delays_dir, "Write raw delay samples here");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run a simulation study described by a config file");
  experiment->add_option("--config", exp.config, "Experiment config")->required()->check(CLI::ExistingFile);
  experiment->add_option("--reps", exp.reps, "Replications");
  experiment->add_option("--seed", exp.seed, "Master seed");
  experiment->add_option("--workers", exp.workers, "Threads (0 = all)");
  experiment->add_option("--table-file", exp.table_file, "Critical values overriding the bundled table")
      ->check(CLI::ExistingFile);
  experiment->add_option("--report", exp.report, "Write a CSV report here");
  experiment->add_option("--delays-dir", exp.delays_dir, "Write raw delay samples here");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Write one synthetic dataset as CSV");
  simulate->add_option("--config", sim.config, "Experiment config")->required()->check(CLI::ExistingFile);
  simulate->add_option("--seed", sim.seed, "Seed (default: the config's seed)");
  simulate->add_option("--output,-o", sim.output, "Output file (default stdout)");

  RetrospectiveArgs retro;
  auto* retrospective = app.add_subcommand("retrospective", "Locate a single change in a complete sample");
  retrospective->add_option("data", retro.data, "CSV file with header y,x2,...,xp")
      ->required()
      ->check(CLI::ExistingFile);
  retrospective->add_option("--n", retro.n, "Use the first n rows (default all)");
  retrospective->add_flag("--squared", retro.squared, "CUSUM of squared residuals");
  retrospective->add_option("--bandwidth", retro.bandwidth, "Bartlett bandwidth for eta");
  retrospective->add_flag("--independent-errors", retro.independent_errors, "Estimate eta without autocovariances");
  retrospective->add_option("--output,-o", retro.output, "Segment CSV (default stdout)");

  LookupArgs look;
  auto* lookup = app.add_subcommand("critical-value", "Print the critical value for a functional or detector");
  lookup->add_option("name", look.name, "Functional or detector name");
  lookup->add_flag("--all", look.all, "Print the whole table as CSV");
  lookup->add_option("--gamma", look.gamma, "Boundary exponent")->capture_default_str();
  lookup->add_option("--alpha", look.alpha, "Nominal level")->capture_default_str();
  lookup->add_option("--table-file", look.table_file, "Critical values overriding the bundled table")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (monitor->parsed()) return cmd_monitor(mon, out);
    if (build->parsed()) return cmd_build_tables(bt, out);
    if (reproduce->parsed()) {
      if (list) {
        list_scenarios(out);
        return 0;
      }
      if (rep.scenario.empty()) fail(ErrorCode::InvalidArgument, "reproduce needs a scenario name or --list");
      return cmd_reproduce(rep, out, err);
    }
    if (experiment->parsed()) return cmd_experiment(exp, out);
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (retrospective->parsed()) return cmd_retrospective(retro, out);
    if (lookup->parsed()) return cmd_lookup(look, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace pagecusum::cli
