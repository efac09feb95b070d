#include "pagecusum/critical_values.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "pagecusum/error.hpp"
#include "parallel.hpp"

namespace pagecusum {

std::string_view to_string(LimitFunctional f) noexcept {
  switch (f) {
    case LimitFunctional::PageTwoSided: return "PAGE_TWO_SIDED_LIMIT";
    case LimitFunctional::PageOneSided: return "PAGE_ONE_SIDED_LIMIT";
    case LimitFunctional::CusumAbs: return "CUSUM_ABS_LIMIT";
    case LimitFunctional::CusumRaw: return "CUSUM_RAW_LIMIT";
  }
  return "?";
}

LimitFunctional parse_functional(std::string_view name) {
  std::string key;
  for (char ch : name) key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (char& ch : key) {
    if (ch == '-') ch = '_';
  }
  for (LimitFunctional f : kAllFunctionals) {
    const std::string_view full = to_string(f);
    if (key == full || key == full.substr(0, full.size() - std::string_view("_LIMIT").size())) return f;
  }
  fail(ErrorCode::InvalidArgument, "unknown limit functional '" + std::string(name) + "'");
}

LimitFunctional limit_for(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::CusumAbs:
    case DetectorKind::SqCusumAbs:
      return LimitFunctional::CusumAbs;
    case DetectorKind::CusumRaw:
    case DetectorKind::SqCusumRaw:
      return LimitFunctional::CusumRaw;
    case DetectorKind::PageUp:
    case DetectorKind::PageDown:
    case DetectorKind::SqPageUp:
      return LimitFunctional::PageOneSided;
    case DetectorKind::PageTwoSided:
    case DetectorKind::SqPageTwoSided:
      return LimitFunctional::PageTwoSided;
  }
  return LimitFunctional::PageTwoSided;
}

// ---------------------------------------------------------------------------
// Paths and functionals

namespace {

void fill_path(std::vector<double>& values, std::size_t grid, Rng& rng) {
  std::normal_distribution<double> increment(0.0, std::sqrt(1.0 / static_cast<double>(grid)));
  values.resize(grid + 1);
  values[0] = 0.0;
  double w = 0.0;
  for (std::size_t j = 1; j <= grid; ++j) {
    w += increment(rng);
    values[j] = w;
  }
}

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 0.5)) {
    fail(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 0.5), got " + std::to_string(gamma));
  }
}

/// Grid-dependent constants shared by every path of a simulation.
class FunctionalEvaluator {
 public:
  FunctionalEvaluator(std::size_t grid, std::span<const FunctionalSpec> specs)
      : grid_(grid), specs_(specs.begin(), specs.end()) {
    if (grid < kMinFunctionalGrid) {
      fail(ErrorCode::GridTooCoarse,
           "grid " + std::to_string(grid) + " below minimum " + std::to_string(kMinFunctionalGrid));
    }
    one_minus_t_.resize(grid + 1);
    for (std::size_t j = 0; j <= grid; ++j) {
      one_minus_t_[j] = 1.0 - static_cast<double>(j) / static_cast<double>(grid);
    }
    for (const auto& spec : specs_) {
      check_gamma(spec.gamma);
      auto it = std::find(gammas_.begin(), gammas_.end(), spec.gamma);
      spec_gamma_.push_back(static_cast<std::size_t>(it - gammas_.begin()));
      if (it == gammas_.end()) gammas_.push_back(spec.gamma);
    }
    weights_.resize(gammas_.size());
    for (std::size_t g = 0; g < gammas_.size(); ++g) {
      weights_[g].resize(grid + 1);
      for (std::size_t j = 1; j <= grid; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(grid);
        weights_[g][j] = gammas_[g] == 0.0 ? 1.0 : std::pow(t, -gammas_[g]);
      }
    }
  }

  void evaluate(std::span<const double> w, std::span<double> out) const {
    if (w.size() != grid_ + 1) fail(ErrorCode::InvalidArgument, "path length does not match grid");
    std::fill(out.begin(), out.end(), -std::numeric_limits<double>::infinity());
    double vmin = 0.0;  // running extrema of W(s)/(1-s), including s = 0
    double vmax = 0.0;
    for (std::size_t j = 1; j < grid_; ++j) {
      const double wt = w[j];
      const double scale = one_minus_t_[j];
      const double v = wt / scale;
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
      const double up = wt - scale * vmin;
      const double down = scale * vmax - wt;
      const double raw[4] = {std::max(up, down), up, std::abs(wt), wt};
      for (std::size_t s = 0; s < specs_.size(); ++s) {
        const double value = raw[static_cast<int>(specs_[s].functional)] * weights_[spec_gamma_[s]][j];
        out[s] = std::max(out[s], value);
      }
    }
  }

 private:
  std::size_t grid_;
  std::vector<FunctionalSpec> specs_;
  std::vector<double> gammas_;
  std::vector<std::size_t> spec_gamma_;
  std::vector<double> one_minus_t_;
  std::vector<std::vector<double>> weights_;
};

static_assert(static_cast<int>(LimitFunctional::PageTwoSided) == 0);
static_assert(static_cast<int>(LimitFunctional::PageOneSided) == 1);
static_assert(static_cast<int>(LimitFunctional::CusumAbs) == 2);
static_assert(static_cast<int>(LimitFunctional::CusumRaw) == 3);

}  // namespace

WienerPath simulate_path(std::size_t grid_size, Rng& rng) {
  if (grid_size < 2) fail(ErrorCode::InvalidArgument, "grid size must be at least 2");
  WienerPath path;
  fill_path(path.values, grid_size, rng);
  return path;
}

WienerPath simulate_path(std::size_t grid_size, std::uint64_t seed) {
  Rng rng(seed);
  return simulate_path(grid_size, rng);
}

WienerPath path_from_increments(std::span<const double> increments) {
  WienerPath path;
  path.values.reserve(increments.size() + 1);
  path.values.push_back(0.0);
  double w = 0.0;
  for (double dw : increments) {
    w += dw;
    path.values.push_back(w);
  }
  return path;
}

double evaluate_functional(const WienerPath& path, LimitFunctional f, double gamma) {
  const FunctionalSpec spec{f, gamma};
  const FunctionalEvaluator evaluator(path.grid_size(), std::span(&spec, 1));
  double out = 0.0;
  evaluator.evaluate(path.values, std::span(&out, 1));
  return out;
}

std::vector<std::vector<double>> simulate_functional_samples(std::span<const FunctionalSpec> specs,
                                                             const SimulationPlan& plan) {
  if (plan.reps == 0) fail(ErrorCode::InvalidArgument, "reps must be positive");
  const FunctionalEvaluator evaluator(plan.grid, specs);
  std::vector<std::vector<double>> samples(specs.size(), std::vector<double>(plan.reps));

  const unsigned workers = std::min<unsigned>(resolve_workers(plan.workers), static_cast<unsigned>(plan.reps));
  auto work = [&](unsigned worker) {
    std::vector<double> path;
    std::vector<double> values(specs.size());
    for (std::size_t r = worker; r < plan.reps; r += workers) {
      Rng rng = make_stream(plan.seed, r);
      fill_path(path, plan.grid, rng);
      evaluator.evaluate(path, values);
      for (std::size_t s = 0; s < specs.size(); ++s) samples[s][r] = values[s];
    }
  };
  detail::run_workers(workers, work);
  return samples;
}

double empirical_quantile(std::span<const double> sample, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (sample.empty()) fail(ErrorCode::InvalidArgument, "empty sample");
  const double n = static_cast<double>(sample.size());
  // 1e-9 keeps (1 - 0.05) * 20000 from rounding up to 19001.
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sample.size());
  std::vector<double> sorted(sample.begin(), sample.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1), sorted.end());
  return sorted[rank - 1];
}

double simulate_critical_value(LimitFunctional f, double gamma, double alpha, std::size_t reps, std::size_t grid,
                               std::uint64_t seed, unsigned workers) {
  if (reps < 100) fail(ErrorCode::InvalidArgument, "need at least 100 replications");
  const FunctionalSpec spec{f, gamma};
  const auto samples = simulate_functional_samples(std::span(&spec, 1), {reps, grid, seed, workers});
  return empirical_quantile(samples.front(), alpha);
}

// ---------------------------------------------------------------------------
// Closed forms at gamma = 0

double cusum_abs_cdf_gamma0(double c) {
  if (!(c > 0.0)) fail(ErrorCode::NonpositiveC, "c must be positive, got " + std::to_string(c));
  constexpr double pi = std::numbers::pi;
  double sum = 0.0;
  for (int k = 0;; ++k) {
    const double odd = 2.0 * k + 1.0;
    const double term = (k % 2 == 0 ? 1.0 : -1.0) / odd * std::exp(-pi * pi * odd * odd / (8.0 * c * c));
    sum += term;
    if (std::abs(term) < 1e-14) break;
  }
  return std::clamp(4.0 / pi * sum, 0.0, 1.0);
}

namespace {

template <typename Cdf>
double bisect_quantile(Cdf cdf, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  const double target = 1.0 - alpha;
  double lo = 0.1;
  double hi = 10.0;
  if (cdf(lo) >= target || cdf(hi) <= target) {
    fail(ErrorCode::AlphaOutOfRange, "quantile for alpha " + std::to_string(alpha) + " lies outside [0.1, 10]");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double invert_cdf_gamma0(double alpha) { return bisect_quantile(cusum_abs_cdf_gamma0, alpha); }

double cusum_raw_cdf_gamma0(double c) {
  if (!(c > 0.0)) fail(ErrorCode::NonpositiveC, "c must be positive, got " + std::to_string(c));
  return std::erf(c / std::numbers::sqrt2);
}

double invert_cusum_raw_cdf_gamma0(double alpha) { return bisect_quantile(cusum_raw_cdf_gamma0, alpha); }

// ---------------------------------------------------------------------------
// Provenance and tables

Provenance Provenance::simulated(std::size_t grid, std::size_t reps, std::optional<std::uint64_t> seed) {
  return {Kind::Simulated, grid, reps, seed};
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::ClosedForm: return "closed_form";
    case Kind::Interpolated: return "interpolated";
    case Kind::Simulated: {
      std::string out = "simulated:G=" + std::to_string(grid) + ":R=" + std::to_string(reps);
      if (seed) out += ":seed=" + std::to_string(*seed);
      return out;
    }
  }
  return "?";
}

Provenance Provenance::parse(std::string_view text) {
  if (text == "closed_form") return closed_form();
  if (text == "interpolated") return {Kind::Interpolated, 0, 0, std::nullopt};
  if (text.starts_with("simulated")) {
    Provenance p{Kind::Simulated, 0, 0, std::nullopt};
    std::string rest(text.substr(std::string_view("simulated").size()));
    std::istringstream fields(rest);
    std::string field;
    while (std::getline(fields, field, ':')) {
      if (field.empty()) continue;
      const auto eq = field.find('=');
      if (eq == std::string::npos) fail(ErrorCode::InvalidArgument, "bad provenance field '" + field + "'");
      const std::string name = field.substr(0, eq);
      const std::uint64_t value = std::stoull(field.substr(eq + 1));
      if (name == "G") p.grid = value;
      else if (name == "R") p.reps = value;
      else if (name == "seed") p.seed = value;
      else fail(ErrorCode::InvalidArgument, "bad provenance field '" + field + "'");
    }
    return p;
  }
  fail(ErrorCode::InvalidArgument, "unknown provenance '" + std::string(text) + "'");
}

namespace {

std::int64_t micro(double v) { return std::llround(v * 1e6); }

}  // namespace

void CriticalValueTable::set(LimitFunctional f, double gamma, double alpha, double c, Provenance provenance) {
  check_gamma(gamma);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  entries_[Key{f, micro(gamma), micro(alpha)}] = CriticalValue{c, provenance};
}

std::optional<CriticalValue> CriticalValueTable::find(LimitFunctional f, double gamma, double alpha) const {
  const auto it = entries_.find(Key{f, micro(gamma), micro(alpha)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

CriticalValue CriticalValueTable::lookup_entry(LimitFunctional f, double gamma, double alpha) const {
  if (auto exact = find(f, gamma, alpha)) return *exact;

  const std::int64_t a = micro(alpha);
  const std::int64_t g = micro(gamma);
  const CriticalValue* below = nullptr;
  const CriticalValue* above = nullptr;
  std::int64_t g_below = 0;
  std::int64_t g_above = 0;
  for (const auto& [key, value] : entries_) {
    if (key.functional != f || key.alpha_micro != a) continue;
    if (key.gamma_micro < g && (!below || key.gamma_micro > g_below)) {
      below = &value;
      g_below = key.gamma_micro;
    }
    if (key.gamma_micro > g && (!above || key.gamma_micro < g_above)) {
      above = &value;
      g_above = key.gamma_micro;
    }
  }
  if (!below && !above) {
    fail(ErrorCode::AlphaNotTabulated, std::string(to_string(f)) + " has no entries at alpha " +
                                           std::to_string(alpha));
  }
  if (!below || !above) {
    fail(ErrorCode::OutOfHull, "gamma " + std::to_string(gamma) + " outside the tabulated range of " +
                                   std::string(to_string(f)) + " at alpha " + std::to_string(alpha));
  }
  const double w = static_cast<double>(g - g_below) / static_cast<double>(g_above - g_below);
  return CriticalValue{below->c + w * (above->c - below->c), Provenance{Provenance::Kind::Interpolated, 0, 0, {}}};
}

void CriticalValueTable::merge(const CriticalValueTable& other) {
  for (const auto& [key, value] : other.entries_) entries_[key] = value;
}

void CriticalValueTable::write(std::ostream& out) const {
  out << "functional,gamma,alpha,c,provenance\n";
  char buf[160];
  for (const auto& [key, value] : entries_) {
    std::snprintf(buf, sizeof buf, "%s,%.6g,%.6g,%.6g,", std::string(to_string(key.functional)).c_str(),
                  gamma_of(key), alpha_of(key), value.c);
    out << buf << value.provenance.to_string() << '\n';
  }
}

CriticalValueTable CriticalValueTable::read(std::istream& in) {
  CriticalValueTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "functional,gamma,alpha,c,provenance") {
        fail(ErrorCode::MalformedCsv, "critical value table line " + std::to_string(line_no) + ": bad header");
      }
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) {
      fail(ErrorCode::MalformedCsv, "critical value table line " + std::to_string(line_no) + ": expected 5 cells");
    }
    try {
      table.set(parse_functional(cells[0]), std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
                Provenance::parse(cells[4]));
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::MalformedCsv, "critical value table line " + std::to_string(line_no) + ": bad number");
    }
  }
  return table;
}

void CriticalValueTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path.string());
  write(out);
}

CriticalValueTable CriticalValueTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot read " + path.string());
  return read(in);
}

CriticalValue critical_value_for(const CriticalValueTable& table, DetectorKind kind, double gamma, double alpha) {
  return table.lookup_entry(limit_for(kind), gamma, alpha);
}

}  // namespace pagecusum
