#include "abcapf/study.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "abcapf/abc_apf.hpp"
#include "abcapf/abc_smc.hpp"
#include "abcapf/rng.hpp"

namespace abcapf {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::abc_apf ? "abc-apf" : "abc-smc";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "abc-apf") return Algorithm::abc_apf;
  if (name == "abc-smc") return Algorithm::abc_smc;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string GridCell::id() const {
  std::ostringstream os;
  os.precision(17);
  const auto& c = config;
  os << to_string(algorithm) << "|N=" << c.n_particles << "|"
     << to_string(c.resample_scheme) << "|";
  if (c.resample_policy.kind == ResamplePolicy::Kind::every_step) {
    os << "every";
  } else {
    os << "ess:" << c.resample_policy.threshold;
  }
  if (algorithm == Algorithm::abc_apf) {
    os << "|" << to_string(c.proposal.kind) << "|dof=" << c.proposal.dof << "|"
       << to_string(c.kernel.kind) << "|eps=" << c.kernel.epsilon;
  } else {
    os << "|P=" << c.smc_percentile;
  }
  return os.str();
}

double GridCell::tolerance() const {
  return algorithm == Algorithm::abc_apf ? config.kernel.epsilon
                                         : config.smc_percentile;
}

void validate(const StudySpec& spec) {
  if (spec.replicates < 1) throw std::invalid_argument("study: replicates >= 1");
  if (spec.horizon < 1) throw std::invalid_argument("study: horizon >= 1");
  if (spec.grid.empty()) throw std::invalid_argument("study: empty grid");
  for (const auto& cell : spec.grid) validate(cell.config);
}

Summary summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no values");
  Summary s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  const std::size_t mid = values.size() / 2;
  s.median = values.size() % 2 == 1 ? values[mid]
                                    : 0.5 * (values[mid - 1] + values[mid]);
  return s;
}

FilterOutput run_cell(const GridCell& cell, const SvmModel& model,
                      const Trajectory& data, std::uint64_t seed) {
  Rng rng(seed);
  if (cell.algorithm == Algorithm::abc_apf) {
    return abc_apf_run(data.y, model, cell.config, rng);
  }
  return abc_smc_run(data.y, model, cell.config, rng);
}

StudyResult run_study(const StudySpec& spec) {
  validate(spec);
  const SvmModel model(spec.model);
  const std::size_t n_cells = spec.grid.size();
  const std::size_t n_reps = spec.replicates;

  std::vector<Trajectory> data;
  data.reserve(n_reps);
  for (std::size_t r = 0; r < n_reps; ++r) {
    data.push_back(
        simulate(spec.model, spec.horizon, derive(spec.base_seed, r, "data")));
  }
  std::vector<std::string> ids;
  for (const auto& cell : spec.grid) ids.push_back(cell.id());

  StudyResult result;
  result.runs.assign(n_cells, std::vector<RunMetrics>(n_reps));

  // Each task writes only its own slot, so workers never share mutable state.
  const std::size_t n_tasks = n_cells * n_reps;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const std::size_t r = task / n_cells;
      const std::size_t c = task % n_cells;
      try {
        const FilterOutput out = run_cell(spec.grid[c], model, data[r],
                                          derive(spec.base_seed, r, ids[c]));
        result.runs[c][r] = score(out, data[r]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_tasks;
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(spec.threads, 1, n_tasks);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& runs : result.runs) {
    std::vector<double> rmse_v, ae_v, sec_v, deg_v;
    for (const auto& m : runs) {
      rmse_v.push_back(m.rmse);
      ae_v.push_back(m.ae);
      sec_v.push_back(m.elapsed);
      deg_v.push_back(static_cast<double>(m.degeneracy_count));
    }
    result.aggregates.push_back({summarize(rmse_v), summarize(ae_v),
                                 summarize(sec_v), summarize(deg_v)});
  }
  return result;
}

std::vector<GridCell> default_grid(std::size_t n_particles) {
  std::vector<GridCell> grid;
  for (ProposalKind kind : {ProposalKind::central_t, ProposalKind::shifted_t,
                            ProposalKind::noncentral_t}) {
    for (double eps : {0.25, 0.5, 0.75, 1.5}) {
      GridCell cell;
      cell.algorithm = Algorithm::abc_apf;
      cell.config.n_particles = n_particles;
      cell.config.kernel = {KernelKind::gaussian, eps};
      cell.config.proposal = {kind, 2.0};
      grid.push_back(cell);
    }
  }
  for (double p : {0.25, 0.5, 0.75}) {
    GridCell cell;
    cell.algorithm = Algorithm::abc_smc;
    cell.config.n_particles = n_particles;
    cell.config.kernel = {KernelKind::uniform, 1.0};
    cell.config.smc_percentile = p;
    grid.push_back(cell);
  }
  return grid;
}

SvmParams reference_svm_params() {
  return SvmParams(-0.2, 0.95, 0.6, 1.75, 0.1, 0.8);
}

}  // namespace abcapf
