#include "femup/harness.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace femup {

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::fss: return "fss";
    case Algo::fssb: return "fssb";
    case Algo::pso: return "pso";
    case Algo::ga: return "ga";
  }
  return "unknown";
}

Algo algo_from_string(const std::string& name) {
  if (name == "fss") return Algo::fss;
  if (name == "fssb") return Algo::fssb;
  if (name == "pso") return Algo::pso;
  if (name == "ga") return Algo::ga;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void UpdatingProblem::validate() const {
  search_space.validate();
  if (search_space.dim() != fem::ParameterVector::kDim)
    throw std::invalid_argument("search space must cover the 8 updating parameters");
  if (measured_hz.empty()) throw std::invalid_argument("measured frequency list is empty");
  if (static_cast<int>(measured_hz.size()) != n_modes)
    throw std::invalid_argument("measured frequency count must equal n_modes");
  double previous = 0.0;
  for (double f : measured_hz) {
    if (!(f > 0.0)) throw std::invalid_argument("measured frequencies must be positive");
    if (f < previous) throw std::invalid_argument("measured frequencies must ascend");
    previous = f;
  }
  initial_vector.validate();
  mesh.validate();
}

std::vector<double> default_measured_hz() {
  return {6.51, 16.37, 33.44, 33.97, 36.17, 49.41, 50.2, 55.61, 64.04, 69.39};
}

SearchSpace default_search_space() {
  SearchSpace space;
  space.min_position = {2000.0, 7.3e-9, 7.3e-9, 7.3e-7, 3.0e-8, 7.3e-9, 7.3e-7, 3.0e-8};
  space.max_position = {3000.0, 9.8e-9, 9.8e-9, 9.8e-7, 5.5e-8, 9.8e-9, 9.8e-7, 5.5e-8};
  space.max_velocity = {10.0, 0.05e-9, 0.05e-9, 0.05e-7, 0.05e-8, 0.05e-9, 0.05e-7, 0.05e-8};
  space.min_velocity.resize(space.max_velocity.size());
  for (std::size_t d = 0; d < space.max_velocity.size(); ++d)
    space.min_velocity[d] = -space.max_velocity[d];
  return space;
}

UpdatingProblem default_garteur_problem() {
  UpdatingProblem problem;
  problem.measured_hz = default_measured_hz();
  problem.search_space = default_search_space();
  problem.initial_vector = fem::ParameterVector::nominal();
  problem.n_modes = 10;
  return problem;
}

double total_error_percent(std::span<const double> measured, std::span<const double> model) {
  if (measured.size() != model.size())
    throw std::invalid_argument("measured and model frequency lists differ in length");
  double total = 0.0;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    if (!(measured[i] > 0.0)) throw std::invalid_argument("measured frequencies must be positive");
    total += 100.0 * std::abs(measured[i] - model[i]) / measured[i];
  }
  return total;
}

Objective make_objective(const UpdatingProblem& problem) {
  problem.validate();
  return Objective([problem](std::span<const double> x) {
    const auto params = fem::ParameterVector::from_span(x);
    try {
      const fem::ModalResult modes = fem::model_frequencies(params, problem.n_modes, problem.mesh);
      return total_error_percent(problem.measured_hz, modes.frequencies_hz);
    } catch (const std::exception& e) {
      char detail[512];
      std::snprintf(detail, sizeof detail,
                    "%s (at rho=%g vtp_imin=%g l_imin=%g l_imax=%g l_itors=%g r_imin=%g "
                    "r_imax=%g r_itors=%g)",
                    e.what(), params.rho, params.vtp_imin, params.l_imin, params.l_imax,
                    params.l_itors, params.r_imin, params.r_imax, params.r_itors);
      throw std::runtime_error(detail);
    }
  });
}

FssSettings default_fss_settings(const SearchSpace& space) {
  FssSettings settings;
  const SearchSpace reference = default_search_space();
  if (space.min_position == reference.min_position &&
      space.max_position == reference.max_position) {
    settings.step_ind_init = {30.0, 0.08e-9, 0.08e-9, 0.08e-7, 0.08e-8, 0.08e-9, 0.08e-7, 0.08e-8};
  } else {
    settings.step_ind_init.resize(space.dim());
    for (std::size_t d = 0; d < space.dim(); ++d)
      settings.step_ind_init[d] = 0.03 * space.width(d);
  }
  settings.step_ind_final.resize(settings.step_ind_init.size());
  for (std::size_t d = 0; d < settings.step_ind_init.size(); ++d)
    settings.step_ind_final[d] = 0.1 * settings.step_ind_init[d];
  return settings;
}

AlgoSettings default_algo_settings(const SearchSpace& space) {
  return {default_fss_settings(space), PsoSettings{}, GaSettings{}};
}

RunRecord run_trial(Algo algo, const UpdatingProblem& problem, const AlgoSettings& settings,
                    const RunSettings& run) {
  Objective objective = make_objective(problem);
  switch (algo) {
    case Algo::fss: {
      FssSettings fss = settings.fss;
      fss.bias_enabled = false;
      return run_fss(problem.search_space, objective, fss, run);
    }
    case Algo::fssb: {
      FssSettings fss = settings.fss;
      fss.bias_enabled = true;
      return run_fss(problem.search_space, objective, fss, run);
    }
    case Algo::pso:
      return run_pso(problem.search_space, objective, settings.pso, run);
    case Algo::ga:
      return run_ga(problem.search_space, objective, settings.ga, run);
  }
  throw std::logic_error("unreachable algorithm tag");
}

namespace {

AlgoSummary summarize(Algo algo, const UpdatingProblem& problem,
                      const std::vector<RunRecord>& completed, int requested, int failed,
                      const RunSettings& run) {
  AlgoSummary summary;
  summary.algorithm = to_string(algo);
  summary.trials_requested = requested;
  summary.trials_completed = static_cast<int>(completed.size());
  summary.trials_failed = failed;
  summary.mean_parameters.assign(fem::ParameterVector::kDim, 0.0);
  summary.mean_mode_errors.assign(problem.measured_hz.size(), 0.0);
  summary.mean_best_trace.assign(run.max_iter, 0.0);
  if (completed.empty()) return summary;

  const double n = static_cast<double>(completed.size());
  for (const auto& record : completed) {
    summary.mean_final_cost += record.best_cost.back();
    summary.mean_initial_cost += record.initial_mean_cost;
    for (std::size_t d = 0; d < record.best_position.size(); ++d)
      summary.mean_parameters[d] += record.best_position[d];
    for (int t = 0; t < run.max_iter; ++t) summary.mean_best_trace[t] += record.best_cost[t];

    const auto params = fem::ParameterVector::from_span(record.best_position);
    const fem::ModalResult modes = fem::model_frequencies(params, problem.n_modes, problem.mesh);
    for (std::size_t i = 0; i < problem.measured_hz.size(); ++i)
      summary.mean_mode_errors[i] +=
          100.0 * std::abs(problem.measured_hz[i] - modes.frequencies_hz[i]) /
          problem.measured_hz[i];
  }
  summary.mean_final_cost /= n;
  summary.mean_initial_cost /= n;
  for (auto& v : summary.mean_parameters) v /= n;
  for (auto& v : summary.mean_mode_errors) v /= n;
  for (auto& v : summary.mean_best_trace) v /= n;

  if (completed.size() > 1) {
    double ss = 0.0;
    for (const auto& record : completed) {
      const double d = record.best_cost.back() - summary.mean_final_cost;
      ss += d * d;
    }
    summary.std_final_cost = std::sqrt(ss / (n - 1.0));
  }
  return summary;
}

}  // namespace

BenchmarkResult run_benchmark(const UpdatingProblem& problem, const std::vector<Algo>& algos,
                              int trials, const std::vector<std::uint64_t>& seeds,
                              const AlgoSettings& settings, const RunSettings& run) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (static_cast<int>(seeds.size()) != trials)
    throw std::invalid_argument("one seed per trial required");
  problem.validate();

  BenchmarkResult result;
  result.summary.trials = trials;
  result.summary.max_iter = run.max_iter;
  result.summary.population_size = run.population_size;

  for (Algo algo : algos) {
    std::vector<RunRecord> completed;
    int failed = 0;
    for (int t = 0; t < trials; ++t) {
      RunSettings trial = run;
      trial.seed = seeds[static_cast<std::size_t>(t)];
      try {
        completed.push_back(run_trial(algo, problem, settings, trial));
      } catch (const std::exception& e) {
        ++failed;
        std::fprintf(stderr, "trial failed: algo=%s seed=%llu: %s\n", to_string(algo).c_str(),
                     static_cast<unsigned long long>(trial.seed), e.what());
      }
    }
    result.summary.per_algorithm.push_back(
        summarize(algo, problem, completed, trials, failed, run));
    for (auto& record : completed) result.records.push_back(std::move(record));
  }
  return result;
}

UpdatingProblem run_surrogate(const UpdatingProblem& problem_template, std::uint64_t truth_seed) {
  problem_template.validate();
  Rng rng(truth_seed);
  UpdatingProblem problem = problem_template;
  const auto truth = uniform_init(problem.search_space, 1, rng).front();
  const auto params = fem::ParameterVector::from_span(truth);
  const fem::ModalResult modes = fem::model_frequencies(params, problem.n_modes, problem.mesh);
  problem.measured_hz = modes.frequencies_hz;
  problem.truth_position = truth;
  return problem;
}

}  // namespace femup
