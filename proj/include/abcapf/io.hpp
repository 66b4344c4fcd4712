#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcapf/filter_config.hpp"
#include "abcapf/study.hpp"
#include "abcapf/svm.hpp"

namespace abcapf {

/// Malformed input file or config; maps to exit code 2 in the CLI.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shortest round-trip decimal form.
std::string format_double(double x);

// data.csv: t,y,h_true with a leading "0,,h0" row.
void write_data_csv(std::ostream& os, const Trajectory& traj);
/// Reads data.csv. h_true may be blank on any row (stored as NaN); the t = 0
/// row is optional.
Trajectory read_data_csv(std::istream& is);

// filtered.csv: t,h_est,ess for t = 1..T.
void write_filtered_csv(std::ostream& os, const FilterOutput& out);

/// summary.csv: one row per (cell, replicate) followed by mean, median, min
/// and max rows per cell.
void write_summary_csv(std::ostream& os, const std::vector<GridCell>& grid,
                       const StudyResult& result);

/// Long format: algo,proposal,kernel,eps,replicate,metric,value.
void write_boxplot_csv(std::ostream& os, const std::vector<GridCell>& grid,
                       const StudyResult& result);

struct ExperimentConfig {
  explicit ExperimentConfig(const SvmParams& m) : model(m) {}

  SvmParams model;
  std::size_t horizon = 500;
  std::size_t particles = 5000;
  std::size_t threads = 1;
  /// Empty means default_grid(particles).
  std::vector<GridCell> grid;
};

/// JSON object with numbers mu, phi, sigma_h, alpha, beta, sigma_v. Optional:
/// horizon, particles, threads, and "grid", a list of objects with keys
/// algo, proposal, kernel, eps, smc_percentile, dof, resample, scheme.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Parses "every" or "ess:N0".
ResamplePolicy parse_resample_policy(const std::string& text);

}  // namespace abcapf
