#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "flownet/local_metrics.hpp"
#include "flownet/network.hpp"
#include "flownet/null_model.hpp"

namespace flownet::cli {

enum class RosterMode { global, per_year };

/// Every knob of a run. Defaults follow the study: T = 2000..2016, d = 0.85,
/// ten null realizations.
struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  YearRange years{2000, 2016};
  std::vector<std::string> metrics;  // empty = all
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
  std::vector<Weight> thresholds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::size_t ensemble_size = 10;
  Seed seed = kDefaultSeed;
  ReciprocityVariant reciprocity = ReciprocityVariant::paper;
  RosterMode roster = RosterMode::global;
  unsigned jobs = 1;
  bool strict = false;
  bool allow_nonconverged = false;
  bool hits_scc = false;
  std::size_t top_k = 10;
  std::vector<std::string> countries;
  std::string direction = "both";  // ego: in, out, both
};

/// Metric names accepted by --metrics.
const std::vector<std::string>& known_metrics();

/// "2014" or "2000..2016". Throws std::invalid_argument.
YearRange parse_years(const std::string& text);

/// Comma-separated tokens, blanks dropped.
std::vector<std::string> split_list(const std::string& text);

/// Base seed of the year-t ensemble: derive_seed(seed, t). Independent of
/// the --years window, so a single-year run reproduces the full run.
Seed year_seed(Seed seed, int year);

const char* to_string(RosterMode mode);

}  // namespace flownet::cli
