// abcapf: simulate stable-SV data, run ABC filters on it, and replicate
// studies over a filter grid.
//
//   abcapf simulate   --config cfg.json --horizon 500 --seed 1 --out data.csv
//   abcapf filter     --algo abc-apf --proposal shifted-t --kernel gaussian
//                     --eps 0.25 --particles 5000 --resample every
//                     --scheme multinomial --data data.csv --seed 7 --out f.csv
//   abcapf experiment --config cfg.json --replicates 100 --seed 1
//                     --out summary.csv [--boxplot-out box.csv]

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "abcapf/abc_apf.hpp"
#include "abcapf/abc_smc.hpp"
#include "abcapf/io.hpp"
#include "abcapf/quadrature.hpp"
#include "abcapf/study.hpp"
#include "abcapf/svm.hpp"
#include "abcapf/weights.hpp"

namespace {

using namespace abcapf;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.precision(17);
  return out;
}

struct SimulateArgs {
  std::string config;
  std::size_t horizon = 500;
  std::uint64_t seed = 1;
  std::string out;
};

struct FilterArgs {
  std::string config;
  std::string algo = "abc-apf";
  std::string proposal = "shifted-t";
  std::string kernel;
  std::optional<double> eps;
  std::optional<double> percentile;
  std::size_t particles = 5000;
  std::string resample = "every";
  std::string scheme = "multinomial";
  std::string data;
  std::uint64_t seed = 1;
  std::string out;
};

struct ExperimentArgs {
  std::string config;
  std::size_t replicates = 100;
  std::uint64_t seed = 1;
  std::string out;
  std::string boxplot_out;
  std::size_t threads = 0;
};

void run_simulate(const SimulateArgs& a) {
  const ExperimentConfig cfg = load_config(a.config);
  const Trajectory traj = simulate(cfg.model, a.horizon, a.seed);
  auto out = open_out(a.out);
  write_data_csv(out, traj);
}

void run_filter(const FilterArgs& a) {
  const SvmParams params =
      a.config.empty() ? reference_svm_params() : load_config(a.config).model;
  GridCell cell;
  cell.algorithm = parse_algorithm(a.algo);
  auto& c = cell.config;
  c.n_particles = a.particles;
  c.proposal.kind = parse_proposal_kind(a.proposal);
  const bool apf = cell.algorithm == Algorithm::abc_apf;
  c.kernel.kind = parse_kernel_kind(
      a.kernel.empty() ? (apf ? "gaussian" : "uniform") : a.kernel);
  if (apf && a.percentile) {
    throw InputError("--smc-percentile applies to abc-smc only");
  }
  if (!apf && a.eps) throw InputError("--eps applies to abc-apf only");
  if (a.eps) c.kernel.epsilon = *a.eps;
  if (a.percentile) c.smc_percentile = *a.percentile;
  c.resample_policy = parse_resample_policy(a.resample);
  c.resample_scheme = parse_resample_scheme(a.scheme);
  validate(c);

  std::ifstream in(a.data);
  if (!in) throw InputError("cannot open data '" + a.data + "'");
  const Trajectory traj = read_data_csv(in);

  const FilterOutput result = run_cell(cell, SvmModel(params), traj, a.seed);
  for (double m : result.filtered_mean) {
    if (!std::isfinite(m)) throw NumericalFailure("non-finite filtered mean");
  }
  auto out = open_out(a.out);
  write_filtered_csv(out, result);
  std::cerr << "filter: " << result.filtered_mean.size() << " steps, "
            << result.resample_count << " resamples, "
            << result.degeneracy_count << " degenerate steps, "
            << result.elapsed << " s\n";
}

void run_experiment(const ExperimentArgs& a) {
  const ExperimentConfig cfg = load_config(a.config);
  StudySpec spec(cfg.model);
  spec.horizon = cfg.horizon;
  spec.grid = cfg.grid.empty() ? default_grid(cfg.particles) : cfg.grid;
  spec.replicates = a.replicates;
  spec.base_seed = a.seed;
  spec.threads = a.threads > 0 ? a.threads : cfg.threads;
  validate(spec);

  const StudyResult result = run_study(spec);
  auto out = open_out(a.out);
  write_summary_csv(out, spec.grid, result);
  if (!a.boxplot_out.empty()) {
    auto box = open_out(a.boxplot_out);
    write_boxplot_csv(box, spec.grid, result);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ABC auxiliary particle filtering for alpha-stable stochastic volatility"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate h_0..h_T and y_1..y_T");
  sim_cmd->add_option("--config", sim.config, "JSON model config")->required();
  sim_cmd->add_option("--horizon", sim.horizon, "Number of observations T")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed, "RNG seed");
  sim_cmd->add_option("--out", sim.out, "Output data.csv")->required();

  FilterArgs flt;
  auto* flt_cmd = app.add_subcommand("filter", "Run one filter over a data file");
  flt_cmd->add_option("--config", flt.config,
                      "JSON model config (default: reference parameters)");
  flt_cmd->add_option("--algo", flt.algo)
      ->check(CLI::IsMember({"abc-apf", "abc-smc"}));
  flt_cmd->add_option("--proposal", flt.proposal)
      ->check(CLI::IsMember({"central-t", "shifted-t", "noncentral-t"}));
  flt_cmd->add_option("--kernel", flt.kernel)
      ->check(CLI::IsMember({"gaussian", "uniform"}));
  auto* eps_opt = flt_cmd->add_option("--eps", flt.eps, "ABC-APF kernel bandwidth");
  auto* pct_opt = flt_cmd->add_option("--smc-percentile", flt.percentile,
                                      "ABC-SMC kept fraction P_eps");
  eps_opt->excludes(pct_opt);
  flt_cmd->add_option("--particles", flt.particles)->check(CLI::PositiveNumber);
  flt_cmd->add_option("--resample", flt.resample, "every | ess:N0");
  flt_cmd->add_option("--scheme", flt.scheme)
      ->check(CLI::IsMember({"multinomial", "systematic"}));
  flt_cmd->add_option("--data", flt.data, "Input data.csv")->required();
  flt_cmd->add_option("--seed", flt.seed);
  flt_cmd->add_option("--out", flt.out, "Output filtered.csv")->required();

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Replicated study over a filter grid");
  exp_cmd->add_option("--config", exp.config, "JSON model and grid config")->required();
  exp_cmd->add_option("--replicates", exp.replicates)->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--out", exp.out, "Output summary.csv")->required();
  exp_cmd->add_option("--boxplot-out", exp.boxplot_out, "Long-format per-replicate metrics");
  exp_cmd->add_option("--threads", exp.threads, "Worker threads (default: config or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sim_cmd) run_simulate(sim);
    if (*flt_cmd) run_filter(flt);
    if (*exp_cmd) run_experiment(exp);
  } catch (const QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ProposalEvaluationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DegenerateCloudError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
