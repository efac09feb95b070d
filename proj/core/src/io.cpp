#include "pagecusum/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pagecusum/error.hpp"

namespace pagecusum {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream row(line);
  while (std::getline(row, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t");
    const auto last = cell.find_last_not_of(" \t");
    cells.push_back(first == std::string::npos ? std::string() : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, std::string_view source, std::size_t line_no, std::size_t column) {
  const auto where = [&] {
    return std::string(source) + ":" + std::to_string(line_no) + ": column " + std::to_string(column + 1);
  };
  if (cell.empty()) fail(ErrorCode::MalformedCsv, where() + " is empty");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || errno == ERANGE) {
    fail(ErrorCode::MalformedCsv, where() + " is not a number: '" + cell + "'");
  }
  return v;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  for (int digits = 15; digits <= 17; ++digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return fmt("%.17g", v);
}

Dataset read_dataset(std::istream& in, std::string_view source) {
  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t columns = 0;
  std::vector<double> regressors;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_csv(line);
    if (!have_header) {
      if (cells.empty() || cells.front() != "y") {
        fail(ErrorCode::MalformedCsv, std::string(source) + ":" + std::to_string(line_no) +
                                          ": header must start with column 'y'");
      }
      data.regressor_names.assign(cells.begin() + 1, cells.end());
      columns = cells.size();
      have_header = true;
      continue;
    }
    if (cells.size() != columns) {
      fail(ErrorCode::MalformedCsv, std::string(source) + ":" + std::to_string(line_no) + ": expected " +
                                        std::to_string(columns) + " columns, found " + std::to_string(cells.size()));
    }
    regressors.clear();
    for (std::size_t j = 1; j < cells.size(); ++j) regressors.push_back(parse_cell(cells[j], source, line_no, j));
    data.rows.push_back(Observation::with_intercept(parse_cell(cells[0], source, line_no, 0), regressors));
  }
  if (!have_header) fail(ErrorCode::MalformedCsv, std::string(source) + ": missing header");
  return data;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot read " + path.string());
  return read_dataset(in, path.string());
}

void write_dataset(std::ostream& out, std::span<const Observation> rows, std::span<const std::string> names) {
  const std::size_t p = rows.empty() ? names.size() + 1 : rows.front().dimension();
  out << 'y';
  for (std::size_t j = 1; j < p; ++j) {
    out << ',' << (j - 1 < names.size() ? names[j - 1] : "x" + std::to_string(j + 1));
  }
  out << '\n';
  for (const auto& obs : rows) {
    out << format_double(obs.y);
    for (std::size_t j = 1; j < obs.x.size(); ++j) out << ',' << format_double(obs.x[j]);
    out << '\n';
  }
}

namespace {

std::string opt(const std::optional<double>& v, const char* pattern = "%.6g") {
  return v ? fmt(pattern, *v) : std::string();
}

}  // namespace

void write_experiment_csv(std::ostream& out, const ExperimentReport& report, const Scenario* scenario) {
  out << "scenario,detector,m,gamma,alpha,k_star,horizon,reps,c,provenance,alarms,false_alarms,no_alarm,size,"
         "ref_size,delay_n,delay_min,delay_q1,delay_median,delay_q3,delay_max,"
         "ref_min,ref_q1,ref_median,ref_q3,ref_max\n";
  const auto& spec = report.spec;
  for (const auto& o : report.outcomes) {
    std::optional<ReferenceValue> ref;
    if (scenario) ref = scenario->reference_for(o.kind);
    const auto summary = o.delay_summary();
    std::optional<FiveNumberSummary> ref_delay = ref ? ref->delay : std::nullopt;
    out << (scenario ? scenario->name : std::string("custom")) << ',' << short_name(o.kind) << ',' << spec.m << ','
        << fmt("%g", spec.gamma) << ',' << fmt("%g", spec.alpha) << ','
        << (spec.change ? std::to_string(spec.change->k_star) : std::string()) << ',' << report.horizon << ','
        << o.reps << ',' << fmt("%.6g", o.critical.c * spec.c_multiplier) << ',' << o.critical.provenance.to_string()
        << ',' << o.alarms << ',' << o.false_alarms << ',' << o.no_alarm << ',' << fmt("%.4f", o.size()) << ','
        << opt(ref ? ref->size : std::nullopt, "%.4f") << ',' << o.delays.size();
    const auto cell = [&](auto member) {
      out << ',' << (summary ? fmt("%g", (*summary).*member) : std::string());
    };
    cell(&FiveNumberSummary::min);
    cell(&FiveNumberSummary::q1);
    cell(&FiveNumberSummary::median);
    cell(&FiveNumberSummary::q3);
    cell(&FiveNumberSummary::max);
    const auto ref_cell = [&](auto member, bool shown) {
      out << ',' << (ref_delay && shown ? fmt("%g", (*ref_delay).*member) : std::string());
    };
    const bool all = !(scenario && scenario->median_only);
    ref_cell(&FiveNumberSummary::min, all);
    ref_cell(&FiveNumberSummary::q1, all);
    ref_cell(&FiveNumberSummary::median, true);
    ref_cell(&FiveNumberSummary::q3, all);
    ref_cell(&FiveNumberSummary::max, all);
    out << '\n';
  }
}

void write_experiment_text(std::ostream& out, const ExperimentReport& report, const Scenario* scenario) {
  const auto& spec = report.spec;
  if (scenario) out << scenario->name << " -- " << scenario->description << '\n';
  out << "m=" << spec.m << " gamma=" << spec.gamma << " alpha=" << spec.alpha << " horizon=" << report.horizon
      << " reps=" << spec.reps << " seed=" << spec.master_seed << '\n';
  out << std::left << std::setw(7) << "det" << std::right << std::setw(9) << "c" << std::setw(8) << "size"
      << std::setw(8) << "ref" << std::setw(7) << "false" << std::setw(7) << "none" << "   delay min/q1/med/q3/max"
      << '\n';
  for (const auto& o : report.outcomes) {
    std::optional<ReferenceValue> ref;
    if (scenario) ref = scenario->reference_for(o.kind);
    out << std::left << std::setw(7) << short_name(o.kind) << std::right << std::setw(9)
        << fmt("%.4f", o.critical.c * spec.c_multiplier) << std::setw(8) << fmt("%.4f", o.size()) << std::setw(8)
        << (ref && ref->size ? fmt("%.4f", *ref->size) : std::string("-")) << std::setw(7) << o.false_alarms
        << std::setw(7) << o.no_alarm << "   ";
    if (const auto s = o.delay_summary()) {
      out << fmt("%g", s->min) << '/' << fmt("%g", s->q1) << '/' << fmt("%g", s->median) << '/' << fmt("%g", s->q3)
          << '/' << fmt("%g", s->max);
      if (ref && ref->delay) {
        out << "  (ref " << fmt("%g", ref->delay->min) << '/' << fmt("%g", ref->delay->q1) << '/'
            << fmt("%g", ref->delay->median) << '/' << fmt("%g", ref->delay->q3) << '/' << fmt("%g", ref->delay->max)
            << ')';
      }
    } else {
      out << '-';
    }
    out << '\n';
  }
}

void write_delay_samples(std::ostream& out, const DetectorOutcome& outcome) {
  for (double d : outcome.delays) out << fmt("%g", d) << '\n';
}

void write_segment_csv(std::ostream& out, const SegmentReport& report, std::span<const std::string> names) {
  const std::size_t p = report.before.p;
  out << "segment,start,end,intercept";
  for (std::size_t j = 1; j < p; ++j) {
    out << ',' << (j - 1 < names.size() ? names[j - 1] : "x" + std::to_string(j + 1));
  }
  out << ",sigma_hat\n";
  const auto row = [&](int segment, std::size_t start, std::size_t end, const RegressionFit& fit) {
    out << segment << ',' << start << ',' << end;
    for (double b : fit.beta_hat) out << ',' << fmt("%.6g", b);
    out << ',' << fmt("%.6g", fit.sigma_hat) << '\n';
  };
  row(1, 1, report.k_hat, report.before);
  row(2, report.k_hat + 1, report.n, report.after);
}

}  // namespace pagecusum
