#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "pagecusum/simulation.hpp"

namespace pagecusum::cli {

/// Reads an experiment description from `key = value` lines.
///
///   m = 200                 training length
///   p = 2                   regressors including the intercept
///   beta0 = 1, 1            coefficients before the change
///   error_sigma2 = 0.5      variance of the iid normal errors
///   garch_omega = 0.5       GARCH(1,1) regressor parameters
///   garch_alpha = 0.2
///   garch_beta = 0.3
///   d2 = 1                  regressor mean
///   k_star = 1000           change point (omit for a size run)
///   delta = 0, 0.5          beta_* - beta_0 (required with k_star)
///   detectors = QP, Qabs    any names parse_detector accepts
///   gamma = 0
///   alpha = 0.1
///   horizon = 3000          default 5m, or k_star + 2000 with a change
///   reps = 500
///   seed = 1
///   workers = 0             0 = all hardware threads
///   bandwidth = 0           Bartlett bandwidth; omit for floor(m^(1/3))
///   independent_errors = true
///   c_multiplier = 1
///
/// `#` starts a comment. Unknown keys are an error.
ExperimentSpec parse_experiment_config(std::istream& in, std::string_view source = "<config>");
ExperimentSpec load_experiment_config(const std::filesystem::path& path);

}  // namespace pagecusum::cli
