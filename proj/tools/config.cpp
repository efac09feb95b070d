#include "config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pagecusum/error.hpp"

namespace pagecusum::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

ExperimentSpec parse_experiment_config(std::istream& in, std::string_view source) {
  ExperimentSpec spec;
  std::optional<std::size_t> k_star;
  std::vector<double> delta;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (eq == std::string::npos) fail(ErrorCode::InvalidArgument, where + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    const auto number = [&](const std::string& text) {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || end != text.c_str() + text.size()) {
        fail(ErrorCode::InvalidArgument, where + ": '" + text + "' is not a number");
      }
      return v;
    };
    const auto count = [&] {
      const double v = number(value);
      if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        fail(ErrorCode::InvalidArgument, where + ": " + key + " must be a nonnegative integer");
      }
      return static_cast<std::size_t>(v);
    };
    const auto numbers = [&] {
      std::vector<double> out;
      for (const auto& item : split_list(value)) out.push_back(number(item));
      return out;
    };

    if (key == "m") spec.m = count();
    else if (key == "p") spec.p = count();
    else if (key == "beta0") spec.beta0 = numbers();
    else if (key == "error_sigma2") spec.error_sigma2 = number(value);
    else if (key == "garch_omega") spec.garch.omega = number(value);
    else if (key == "garch_alpha") spec.garch.alpha = number(value);
    else if (key == "garch_beta") spec.garch.beta = number(value);
    else if (key == "d2") spec.garch.d2 = number(value);
    else if (key == "k_star") k_star = count();
    else if (key == "delta") delta = numbers();
    else if (key == "detectors") {
      spec.detectors.clear();
      for (const auto& item : split_list(value)) spec.detectors.push_back(parse_detector(item));
    } else if (key == "gamma") spec.gamma = number(value);
    else if (key == "alpha") spec.alpha = number(value);
    else if (key == "horizon") spec.horizon = count();
    else if (key == "reps") spec.reps = count();
    else if (key == "seed") spec.master_seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "workers") spec.workers = static_cast<unsigned>(count());
    else if (key == "bandwidth") spec.lrv.bandwidth = count();
    else if (key == "independent_errors") {
      if (value != "true" && value != "false") {
        fail(ErrorCode::InvalidArgument, where + ": independent_errors must be true or false");
      }
      spec.lrv.independent_errors = value == "true";
    } else if (key == "c_multiplier") spec.c_multiplier = number(value);
    else fail(ErrorCode::InvalidArgument, where + ": unknown key '" + key + "'");
  }
  if (k_star) {
    spec.change = ChangeSpec{*k_star, delta};
  } else if (!delta.empty()) {
    fail(ErrorCode::InvalidArgument, std::string(source) + ": delta given without k_star");
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot read " + path.string());
  return parse_experiment_config(in, path.string());
}

}  // namespace pagecusum::cli
