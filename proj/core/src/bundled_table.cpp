#include <array>

#include "pagecusum/critical_values.hpp"

namespace pagecusum {

namespace {

constexpr std::array<double, 6> kGammas = {0.00, 0.15, 0.25, 0.35, 0.45, 0.49};
constexpr std::array<double, 5> kAlphas = {0.010, 0.025, 0.050, 0.100, 0.250};

// Published Page tables, 100,000 paths on a 100,000-point grid.
constexpr double kPageOneSided[6][5] = {
    {2.5955, 2.2564, 1.9897, 1.6924, 1.2474}, {2.6632, 2.3341, 2.0757, 1.7915, 1.3671},
    {2.7372, 2.4206, 2.1686, 1.8992, 1.4887}, {2.8691, 2.5684, 2.3273, 2.0757, 1.6817},
    {3.1712, 2.9224, 2.6976, 2.4592, 2.0932}, {3.5385, 3.2791, 3.0640, 2.8225, 2.4391},
};
constexpr double kPageTwoSided[6][5] = {
    {2.8262, 2.5188, 2.2599, 1.9914, 1.5918}, {2.8925, 2.5925, 2.3416, 2.0803, 1.6976},
    {2.9638, 2.6707, 2.4296, 2.1758, 1.8063}, {3.0857, 2.8041, 2.5758, 2.3339, 1.9839},
    {3.3817, 3.1259, 2.9241, 2.7002, 2.3685}, {3.7357, 3.4903, 3.2848, 3.0603, 2.7178},
};

// Ordinary CUSUM functionals for gamma > 0, produced by
// `pagecusum build-tables --functional CUSUM_ABS_LIMIT,CUSUM_RAW_LIMIT`
// with the grid/reps/seed recorded below.
constexpr std::size_t kCusumGrid = 100'000;
constexpr std::size_t kCusumReps = 100'000;
constexpr std::uint64_t kCusumSeed = 20'140'101;
constexpr double kCusumAbs[5][5] = {
    {2.86662, 2.55586, 2.30432, 2.03675, 1.61723},
    {2.9317, 2.62162, 2.37515, 2.11439, 1.70484},
    {3.03972, 2.74506, 2.5062, 2.24337, 1.85492},
    {3.29507, 3.02461, 2.79697, 2.55739, 2.19509},
    {3.62116, 3.35394, 3.13994, 2.89851, 2.53058},
};
constexpr double kCusumRaw[5][5] = {
    {2.61185, 2.29834, 2.03608, 1.72416, 1.24201},
    {2.68167, 2.37065, 2.11197, 1.8104, 1.34288},
    {2.80255, 2.4943, 2.23828, 1.95431, 1.5068},
    {3.07609, 2.78319, 2.55299, 2.2924, 1.87957},
    {3.40982, 3.13512, 2.8936, 2.62806, 2.20492},
};

CriticalValueTable build_bundled() {
  CriticalValueTable table;
  const Provenance published = Provenance::simulated(100'000, 100'000, std::nullopt);
  const Provenance cusum_sim = Provenance::simulated(kCusumGrid, kCusumReps, kCusumSeed);
  for (std::size_t a = 0; a < kAlphas.size(); ++a) {
    for (std::size_t g = 0; g < kGammas.size(); ++g) {
      table.set(LimitFunctional::PageOneSided, kGammas[g], kAlphas[a], kPageOneSided[g][a], published);
      table.set(LimitFunctional::PageTwoSided, kGammas[g], kAlphas[a], kPageTwoSided[g][a], published);
      if (g > 0) {
        table.set(LimitFunctional::CusumAbs, kGammas[g], kAlphas[a], kCusumAbs[g - 1][a], cusum_sim);
        table.set(LimitFunctional::CusumRaw, kGammas[g], kAlphas[a], kCusumRaw[g - 1][a], cusum_sim);
      }
    }
    table.set(LimitFunctional::CusumAbs, 0.0, kAlphas[a], invert_cdf_gamma0(kAlphas[a]), Provenance::closed_form());
    table.set(LimitFunctional::CusumRaw, 0.0, kAlphas[a], invert_cusum_raw_cdf_gamma0(kAlphas[a]),
              Provenance::closed_form());
  }
  return table;
}

}  // namespace

const CriticalValueTable& CriticalValueTable::bundled() {
  static const CriticalValueTable table = build_bundled();
  return table;
}

}  // namespace pagecusum
