#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "femup/fss.hpp"
#include "femup/ga.hpp"
#include "femup/garteur.hpp"
#include "femup/pso.hpp"
#include "femup/search_space.hpp"

namespace femup {

enum class Algo { fss, fssb, pso, ga };

std::string to_string(Algo algo);
Algo algo_from_string(const std::string& name);

/// One model-updating benchmark instance: the reference frequencies, the
/// bounded parameter space, the nominal starting vector and the mesh the
/// model frequencies are computed on.
struct UpdatingProblem {
  std::vector<double> measured_hz;
  SearchSpace search_space;
  fem::ParameterVector initial_vector;
  int n_modes = 10;
  fem::GarteurConfig mesh;
  /// Set on surrogate problems: the parameter vector whose model
  /// frequencies serve as the measured data (global optimum, cost 0).
  std::optional<std::vector<double>> truth_position;

  void validate() const;
};

/// Benchmark defaults: measured aeroplane frequencies, the position and
/// velocity bounds of the eight updating parameters, the nominal start.
std::vector<double> default_measured_hz();
SearchSpace default_search_space();
UpdatingProblem default_garteur_problem();

/// Sum over modes of the absolute percentage frequency error,
/// sum_i 100 * |measured_i - model_i| / measured_i.
double total_error_percent(std::span<const double> measured, std::span<const double> model);

/// Objective mapping an 8-component position vector to the total error of
/// its model frequencies against the problem's measured list.
Objective make_objective(const UpdatingProblem& problem);

/// Per-algorithm parameter sets, defaulted to the benchmark settings.
struct AlgoSettings {
  FssSettings fss;
  PsoSettings pso;
  GaSettings ga;
};

/// FSS step defaults for a given space: the benchmark per-dimension
/// individual step amplitudes where the space matches the benchmark
/// bounds, otherwise 3% of each dimension's width; final amplitudes are
/// 10% of the initial ones.
FssSettings default_fss_settings(const SearchSpace& space);
AlgoSettings default_algo_settings(const SearchSpace& space);

/// One seeded optimization of the problem with the chosen algorithm.
RunRecord run_trial(Algo algo, const UpdatingProblem& problem, const AlgoSettings& settings,
                    const RunSettings& run);

struct AlgoSummary {
  std::string algorithm;
  int trials_requested = 0;
  int trials_completed = 0;
  int trials_failed = 0;
  double mean_final_cost = 0.0;
  double std_final_cost = 0.0;
  double mean_initial_cost = 0.0;
  std::vector<double> mean_parameters;   // over completed trials
  std::vector<double> mean_mode_errors;  // per mode, percent
  std::vector<double> mean_best_trace;   // per iteration
};

struct BenchmarkSummary {
  int trials = 0;
  int max_iter = 0;
  int population_size = 0;
  std::vector<AlgoSummary> per_algorithm;
};

struct BenchmarkResult {
  BenchmarkSummary summary;
  std::vector<RunRecord> records;  // completed trials, algorithm-major, seed order
};

/// Runs trials x algorithms, one seed per trial (seeds.size() == trials).
/// A failed trial is excluded from the aggregates and counted in
/// trials_failed.
BenchmarkResult run_benchmark(const UpdatingProblem& problem, const std::vector<Algo>& algos,
                              int trials, const std::vector<std::uint64_t>& seeds,
                              const AlgoSettings& settings, const RunSettings& run);

/// Builds a synthetic problem from the template: a truth vector sampled
/// uniformly inside the bounds, whose model frequencies become the
/// measured data. The returned problem has a known global optimum of zero
/// cost at the truth vector.
UpdatingProblem run_surrogate(const UpdatingProblem& problem_template, std::uint64_t truth_seed);

/// CSV body (with header line) of the per-iteration traces; deterministic
/// byte-for-byte for equal records.
std::string trace_csv(const std::vector<RunRecord>& records);
std::string params_csv(const BenchmarkSummary& summary);
std::string summary_json(const BenchmarkSummary& summary);

/// Writes trace.csv, summary.json and params.csv into out_dir (created if
/// missing).
void emit_outputs(const BenchmarkSummary& summary, const std::vector<RunRecord>& records,
                  const std::filesystem::path& out_dir);

}  // namespace femup
