#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abcapf/filter_config.hpp"
#include "abcapf/metrics.hpp"
#include "abcapf/svm.hpp"

namespace abcapf {

enum class Algorithm { abc_apf, abc_smc };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

struct GridCell {
  Algorithm algorithm = Algorithm::abc_apf;
  FilterConfig config{};

  /// Canonical description of the cell. Used as the seeding label, so two
  /// cells with identical settings see identical random streams.
  std::string id() const;
  /// eps for ABC-APF, P_eps for ABC-SMC.
  double tolerance() const;
};

struct StudySpec {
  explicit StudySpec(const SvmParams& m) : model(m) {}

  SvmParams model;
  std::size_t horizon = 500;
  std::vector<GridCell> grid;
  std::size_t replicates = 100;
  std::uint64_t base_seed = 1;
  /// Worker threads. Results do not depend on it.
  std::size_t threads = 1;
};

void validate(const StudySpec& spec);

struct Summary {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(std::vector<double> values);

struct CellAggregate {
  Summary rmse;
  Summary ae;
  Summary seconds;
  Summary degeneracies;
};

struct StudyResult {
  /// runs[c][r]: metrics of grid cell c on replicate r.
  std::vector<std::vector<RunMetrics>> runs;
  std::vector<CellAggregate> aggregates;
};

/// Runs every grid cell on every replicate. Replicate r simulates its data
/// with seed derive(base_seed, r, "data"), shared by all cells (paired
/// comparison); cell c runs with derive(base_seed, r, cell.id()).
StudyResult run_study(const StudySpec& spec);

/// Single filter run of one cell on one data set.
FilterOutput run_cell(const GridCell& cell, const SvmModel& model,
                      const Trajectory& data, std::uint64_t seed);

/// Default comparison grid: eps in {0.25, 0.5, 0.75, 1.5} x {central, shifted,
/// non-central t} with a Gaussian kernel, then ABC-SMC with a uniform kernel
/// at P_eps in {0.25, 0.5, 0.75}.
std::vector<GridCell> default_grid(std::size_t n_particles);

/// Reference simulation settings: alpha = 1.75, beta = 0.1,
/// mu = -0.2, phi = 0.95, sigma_h = 0.6, sigma_v = 0.8.
SvmParams reference_svm_params();

}  // namespace abcapf
