#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>

#include "femup/config.hpp"
#include "femup/harness.hpp"

namespace {

using namespace femup;

std::vector<Algo> parse_algos(const std::string& name) {
  if (name == "all") return {Algo::ga, Algo::pso, Algo::fss, Algo::fssb};
  return {algo_from_string(name)};
}

fem::ParameterVector read_params_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read parameter file " + path.string());
  const nlohmann::json root = nlohmann::json::parse(in);
  if (root.is_array()) {
    const auto values = root.get<std::vector<double>>();
    return fem::ParameterVector::from_span(values);
  }
  fem::ParameterVector params;
  params.rho = root.at("rho").get<double>();
  params.vtp_imin = root.at("vtp_imin").get<double>();
  params.l_imin = root.at("l_imin").get<double>();
  params.l_imax = root.at("l_imax").get<double>();
  params.l_itors = root.at("l_itors").get<double>();
  params.r_imin = root.at("r_imin").get<double>();
  params.r_imax = root.at("r_imax").get<double>();
  params.r_itors = root.at("r_itors").get<double>();
  return params;
}

int cmd_run(const std::string& algo_name, int trials, int iters, int pop, std::uint64_t seed,
            const std::string& problem_name, const std::string& config_path,
            const std::string& out_dir, std::uint64_t truth_seed) {
  HarnessConfig config =
      config_path.empty() ? default_harness_config() : load_config(config_path);
  config.run.max_iter = iters;
  config.run.population_size = pop;

  UpdatingProblem problem = config.problem;
  if (problem_name == "surrogate") {
    problem = run_surrogate(problem, truth_seed);
    std::printf("surrogate problem (truth seed %llu); measured frequencies:\n",
                static_cast<unsigned long long>(truth_seed));
    for (double f : problem.measured_hz) std::printf("  %.6f Hz\n", f);
  } else if (problem_name != "garteur") {
    std::fprintf(stderr, "unknown problem: %s\n", problem_name.c_str());
    return 1;
  }

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  std::iota(seeds.begin(), seeds.end(), seed);

  const std::vector<Algo> algos = parse_algos(algo_name);
  const BenchmarkResult result =
      run_benchmark(problem, algos, trials, seeds, config.algos, config.run);
  emit_outputs(result.summary, result.records, out_dir);

  std::printf("%-6s %8s %14s %14s %10s\n", "algo", "trials", "mean final", "std final", "failed");
  for (const auto& summary : result.summary.per_algorithm)
    std::printf("%-6s %8d %14.6f %14.6f %10d\n", summary.algorithm.c_str(),
                summary.trials_completed, summary.mean_final_cost, summary.std_final_cost,
                summary.trials_failed);
  std::printf("outputs written to %s\n", out_dir.c_str());
  return 0;
}

int cmd_eval(const std::string& params_path, const std::string& config_path, bool dump) {
  const HarnessConfig config =
      config_path.empty() ? default_harness_config() : load_config(config_path);
  const fem::ParameterVector params = params_path.empty()
                                          ? config.problem.initial_vector
                                          : read_params_file(params_path);
  if (dump) {
    std::fputs(fem::dump_mesh(fem::build_garteur(params, config.problem.mesh)).c_str(), stdout);
    return 0;
  }
  const fem::ModalResult modes =
      fem::model_frequencies(params, config.problem.n_modes, config.problem.mesh);
  std::printf("%-6s %14s %14s %10s\n", "mode", "model (Hz)", "measured (Hz)", "error %");
  for (std::size_t i = 0; i < modes.frequencies_hz.size(); ++i) {
    const double measured = config.problem.measured_hz[i];
    const double model = modes.frequencies_hz[i];
    std::printf("%-6zu %14.4f %14.4f %10.4f\n", i + 1, model, measured,
                100.0 * std::abs(measured - model) / measured);
  }
  std::printf("total error %% : %.4f\n",
              total_error_percent(config.problem.measured_hz, modes.frequencies_hz));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metaheuristic finite element model updating benchmark"};
  app.require_subcommand(1);

  std::string algo = "all";
  int trials = 30;
  int iters = 500;
  int pop = 20;
  std::uint64_t seed = 1;
  std::string problem = "garteur";
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t truth_seed = 42;

  CLI::App* run = app.add_subcommand("run", "Run seeded optimization trials");
  run->add_option("--algo", algo, "fss|fssb|pso|ga|all")->capture_default_str();
  run->add_option("--trials", trials, "number of seeded trials per algorithm")
      ->capture_default_str();
  run->add_option("--iters", iters, "iterations per trial")->capture_default_str();
  run->add_option("--pop", pop, "population size")->capture_default_str();
  run->add_option("--seed", seed, "seed of the first trial (consecutive after)")
      ->capture_default_str();
  run->add_option("--problem", problem, "garteur|surrogate")->capture_default_str();
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  run->add_option("--truth-seed", truth_seed, "seed of the surrogate truth vector")
      ->capture_default_str();

  std::string params_path;
  bool dump_mesh_flag = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one parameter vector");
  eval->add_option("--params", params_path, "JSON parameter file (array or named fields)");
  eval->add_option("--config", config_path, "JSON config file");
  eval->add_flag("--dump-mesh", dump_mesh_flag, "print the mesh instead of frequencies");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(algo, trials, iters, pop, seed, problem, config_path, out_dir, truth_seed);
    return cmd_eval(params_path, config_path, dump_mesh_flag);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
