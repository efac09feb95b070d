#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pagecusum/detectors.hpp"
#include "pagecusum/rng.hpp"

namespace pagecusum {

/// Wiener-process functionals whose (1-alpha)-quantiles calibrate the
/// detectors. All take the supremum over 0 < t < 1 with weight t^-gamma:
///   PageTwoSided: sup_{s<=t} |W(t) - (1-t)/(1-s) W(s)|
///   PageOneSided: W(t) - inf_{s<=t} (1-t)/(1-s) W(s)
///   CusumAbs:     |W(t)|
///   CusumRaw:     W(t)
enum class LimitFunctional { PageTwoSided, PageOneSided, CusumAbs, CusumRaw };

inline constexpr std::array kAllFunctionals = {LimitFunctional::PageTwoSided, LimitFunctional::PageOneSided,
                                               LimitFunctional::CusumAbs, LimitFunctional::CusumRaw};

std::string_view to_string(LimitFunctional f) noexcept;
LimitFunctional parse_functional(std::string_view name);

/// Limit law that calibrates a detector.
LimitFunctional limit_for(DetectorKind kind) noexcept;

/// W(j/G) for j = 0..G, W(0) = 0.
struct WienerPath {
  std::vector<double> values;

  std::size_t grid_size() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// Cumulative sum of G iid N(0, 1/G) increments.
WienerPath simulate_path(std::size_t grid_size, Rng& rng);
WienerPath simulate_path(std::size_t grid_size, std::uint64_t seed);
WienerPath path_from_increments(std::span<const double> increments);

inline constexpr std::size_t kMinFunctionalGrid = 100;

/// Discrete supremum over t = j/G, 1 <= j <= G-1, in O(G). The inner
/// extremum over s uses running min/max of W(s)/(1-s).
/// Throws GridTooCoarse if G < 100, GammaOutOfRange for gamma outside [0, 0.5).
double evaluate_functional(const WienerPath& path, LimitFunctional f, double gamma);

struct FunctionalSpec {
  LimitFunctional functional;
  double gamma;
};

/// Evaluates several functionals on many simulated paths; shares every path
/// across the specs. Result is indexed [spec][replication].
struct SimulationPlan {
  std::size_t reps = 20'000;
  std::size_t grid = 10'000;
  std::uint64_t seed = 20'140'101;
  unsigned workers = 0;
};

std::vector<std::vector<double>> simulate_functional_samples(std::span<const FunctionalSpec> specs,
                                                             const SimulationPlan& plan);

/// Order statistic number ceil((1-alpha) n), 1-based. Throws AlphaOutOfRange.
double empirical_quantile(std::span<const double> sample, double alpha);

double simulate_critical_value(LimitFunctional f, double gamma, double alpha, std::size_t reps, std::size_t grid,
                               std::uint64_t seed, unsigned workers = 0);

/// P(sup_{0<t<1} |W(t)| <= c) by its alternating series, summed until a
/// term drops below 1e-14. Throws NonpositiveC.
double cusum_abs_cdf_gamma0(double c);

/// Solves cusum_abs_cdf_gamma0(c) = 1 - alpha by bisection on [0.1, 10].
double invert_cdf_gamma0(double alpha);

/// P(sup_{0<t<1} W(t) <= c) = erf(c / sqrt 2), and its inverse.
double cusum_raw_cdf_gamma0(double c);
double invert_cusum_raw_cdf_gamma0(double alpha);

struct Provenance {
  enum class Kind { Simulated, ClosedForm, Interpolated };

  Kind kind = Kind::ClosedForm;
  std::size_t grid = 0;
  std::size_t reps = 0;
  std::optional<std::uint64_t> seed;

  static Provenance closed_form() { return {}; }
  static Provenance simulated(std::size_t grid, std::size_t reps, std::optional<std::uint64_t> seed);

  /// "closed_form", "interpolated" or "simulated:G=<g>:R=<r>[:seed=<s>]".
  std::string to_string() const;
  static Provenance parse(std::string_view text);

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CriticalValue {
  double c = 0.0;
  Provenance provenance;
};

/// (functional, gamma, alpha) -> c. Keys are matched on a 1e-6 grid so
/// that 0.25 typed by a user equals 0.25 parsed from a file.
class CriticalValueTable {
 public:
  struct Key {
    LimitFunctional functional;
    std::int64_t gamma_micro;
    std::int64_t alpha_micro;

    auto operator<=>(const Key&) const = default;
  };

  void set(LimitFunctional f, double gamma, double alpha, double c, Provenance provenance);
  std::optional<CriticalValue> find(LimitFunctional f, double gamma, double alpha) const;

  /// Exact entry, else linear interpolation in gamma between the nearest
  /// tabulated gammas at the same alpha. Never interpolates in alpha.
  /// Throws AlphaNotTabulated or OutOfHull.
  CriticalValue lookup_entry(LimitFunctional f, double gamma, double alpha) const;
  double lookup(LimitFunctional f, double gamma, double alpha) const {
    return lookup_entry(f, gamma, alpha).c;
  }

  /// Entries of `other` replace entries with the same key.
  void merge(const CriticalValueTable& other);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<Key, CriticalValue>& entries() const noexcept { return entries_; }

  /// CSV with header functional,gamma,alpha,c,provenance; c to 6 significant digits.
  void write(std::ostream& out) const;
  static CriticalValueTable read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static CriticalValueTable load(const std::filesystem::path& path);

  /// Published one- and two-sided Page tables, closed-form gamma = 0 rows
  /// and simulated ordinary-CUSUM rows for gamma > 0.
  static const CriticalValueTable& bundled();

  static double gamma_of(const Key& key) noexcept { return static_cast<double>(key.gamma_micro) * 1e-6; }
  static double alpha_of(const Key& key) noexcept { return static_cast<double>(key.alpha_micro) * 1e-6; }

 private:
  std::map<Key, CriticalValue> entries_;
};

/// Critical value for a detector: lookup of limit_for(kind).
CriticalValue critical_value_for(const CriticalValueTable& table, DetectorKind kind, double gamma, double alpha);

}  // namespace pagecusum
