#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "femup/config.hpp"
#include "femup/harness.hpp"

using namespace femup;

namespace {

UpdatingProblem coarse_problem() {
  UpdatingProblem problem = default_garteur_problem();
  problem.mesh.fuselage_elements = 4;
  problem.mesh.wing_elements = 4;
  problem.mesh.vtp_elements = 2;
  problem.mesh.htp_elements = 2;
  return problem;
}

UpdatingProblem coarse_surrogate(std::uint64_t truth_seed = 42) {
  return run_surrogate(coarse_problem(), truth_seed);
}

}  // namespace

TEST_CASE("total error vanishes only for a perfect match") {
  const std::vector<double> measured{1.0, 2.0, 3.0};
  CHECK(total_error_percent(measured, measured) == 0.0);
  const std::vector<double> off{1.0, 2.2, 3.0};
  CHECK(total_error_percent(measured, off) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK_THROWS_AS(total_error_percent(measured, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(total_error_percent(std::vector<double>{0.0}, std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("total error reproduces the published initial and swarm sums") {
  const std::vector<double> measured = default_measured_hz();
  const std::vector<double> initial{5.726, 15.338, 32.457, 35.323, 36.020,
                                    44.992, 54.685, 55.753, 60.021, 68.745};
  const std::vector<double> swarm{6.237, 16.495, 33.306, 34.154, 35.908,
                                  48.839, 52.938, 55.512, 64.16, 68.922};
  CHECK(std::abs(total_error_percent(measured, initial) - 51.024) <= 0.005);
  CHECK(std::abs(total_error_percent(measured, swarm) - 14.272) <= 0.005);
}

TEST_CASE("the surrogate objective is zero at its truth vector") {
  const UpdatingProblem problem = coarse_surrogate();
  REQUIRE(problem.truth_position.has_value());
  Objective objective = make_objective(problem);
  CHECK(objective(*problem.truth_position) <= 1e-9);
  CHECK(objective.evaluations() == 1);
}

TEST_CASE("the objective is pure and finite inside the box") {
  const UpdatingProblem problem = coarse_surrogate();
  Objective objective = make_objective(problem);
  const auto x = problem.initial_vector.to_array();
  const double first = objective(x);
  const double second = objective(x);
  CHECK(first == second);
  CHECK(first > 0.0);

  Rng rng(7);
  for (const auto& point : uniform_init(problem.search_space, 10, rng)) {
    const double cost = objective(point);
    CHECK(std::isfinite(cost));
    CHECK(cost >= 0.0);
  }
}

TEST_CASE("surrogate construction is deterministic and keeps the template mesh") {
  const UpdatingProblem a = coarse_surrogate(11);
  const UpdatingProblem b = coarse_surrogate(11);
  CHECK(a.measured_hz == b.measured_hz);
  CHECK(a.truth_position == b.truth_position);
  CHECK(a.mesh.fuselage_elements == 4);
  const UpdatingProblem c = coarse_surrogate(12);
  CHECK(a.measured_hz != c.measured_hz);
}

TEST_CASE("trials are reproducible and elitist on the updating problem") {
  const UpdatingProblem problem = coarse_surrogate();
  const AlgoSettings settings = default_algo_settings(problem.search_space);
  RunSettings run;
  run.population_size = 6;
  run.max_iter = 10;
  run.seed = 3;
  for (Algo algo : {Algo::fss, Algo::fssb, Algo::pso, Algo::ga}) {
    const RunRecord a = run_trial(algo, problem, settings, run);
    const RunRecord b = run_trial(algo, problem, settings, run);
    CHECK(a == b);
    CHECK(a.best_cost.size() == 10);
    CHECK(a.mean_cost.size() == 10);
    CHECK(a.best_cost.back() <= a.initial_best_cost);
    CHECK(a.algorithm == to_string(algo));
    // The recorded best cost matches a re-evaluation at the best position.
    Objective objective = make_objective(problem);
    CHECK(objective(a.best_position) == a.best_cost.back());
  }
}

TEST_CASE("a single-trial benchmark reduces to that trial's statistics") {
  const UpdatingProblem problem = coarse_surrogate();
  const AlgoSettings settings = default_algo_settings(problem.search_space);
  RunSettings run;
  run.population_size = 5;
  run.max_iter = 8;
  const BenchmarkResult result =
      run_benchmark(problem, {Algo::pso}, 1, {9}, settings, run);
  REQUIRE(result.records.size() == 1);
  const RunRecord& record = result.records.front();
  const AlgoSummary& summary = result.summary.per_algorithm.front();
  CHECK(summary.trials_completed == 1);
  CHECK(summary.trials_failed == 0);
  CHECK(summary.mean_final_cost == record.best_cost.back());
  CHECK(summary.std_final_cost == 0.0);
  CHECK(summary.mean_initial_cost == record.initial_mean_cost);
  CHECK(summary.mean_parameters == record.best_position);
  CHECK(summary.mean_best_trace == record.best_cost);
}

TEST_CASE("failing trials are excluded and counted") {
  UpdatingProblem problem = coarse_problem();
  // A density range straddling zero makes every evaluation of a negative
  // sample throw inside the model builder.
  problem.search_space.min_position[0] = -3000.0;
  problem.search_space.max_position[0] = -2000.0;
  const AlgoSettings settings = default_algo_settings(problem.search_space);
  RunSettings run;
  run.population_size = 4;
  run.max_iter = 3;
  const BenchmarkResult result =
      run_benchmark(problem, {Algo::ga}, 2, {1, 2}, settings, run);
  const AlgoSummary& summary = result.summary.per_algorithm.front();
  CHECK(summary.trials_failed == 2);
  CHECK(summary.trials_completed == 0);
  CHECK(result.records.empty());
}

TEST_CASE("trace csv is deterministic and sized algorithms x trials x iterations") {
  const UpdatingProblem problem = coarse_surrogate();
  const AlgoSettings settings = default_algo_settings(problem.search_space);
  RunSettings run;
  run.population_size = 5;
  run.max_iter = 6;
  const std::vector<std::uint64_t> seeds{1, 2};
  const BenchmarkResult a =
      run_benchmark(problem, {Algo::fss, Algo::ga}, 2, seeds, settings, run);
  const BenchmarkResult b =
      run_benchmark(problem, {Algo::fss, Algo::ga}, 2, seeds, settings, run);
  const std::string csv_a = trace_csv(a.records);
  CHECK(csv_a == trace_csv(b.records));
  const std::size_t rows = std::count(csv_a.begin(), csv_a.end(), '\n');
  CHECK(rows == 1 + 2 * 2 * 6);  // header + algorithms x trials x iterations
}

TEST_CASE("emitted outputs land on disk and the summary round-trips") {
  const UpdatingProblem problem = coarse_surrogate();
  const AlgoSettings settings = default_algo_settings(problem.search_space);
  RunSettings run;
  run.population_size = 5;
  run.max_iter = 4;
  const BenchmarkResult result =
      run_benchmark(problem, {Algo::fssb}, 1, {5}, settings, run);
  const auto dir = std::filesystem::temp_directory_path() / "femup_test_out";
  std::filesystem::remove_all(dir);
  emit_outputs(result.summary, result.records, dir);
  CHECK(std::filesystem::exists(dir / "trace.csv"));
  CHECK(std::filesystem::exists(dir / "params.csv"));

  std::ifstream in(dir / "summary.json");
  REQUIRE(in.good());
  const nlohmann::json parsed = nlohmann::json::parse(in);
  CHECK(parsed.at("trials") == 1);
  CHECK(parsed.at("algorithms").size() == 1);
  const auto& algo = parsed.at("algorithms").front();
  CHECK(algo.at("algorithm") == "fssb");
  CHECK(algo.at("mean_final_cost").get<double>() ==
        result.summary.per_algorithm.front().mean_final_cost);
  CHECK(algo.at("mean_best_trace").size() == 4);
  CHECK(algo.at("mean_parameters").size() == 8);
  CHECK(algo.at("mean_mode_errors").size() == 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("an unwritable output directory is reported") {
  const BenchmarkSummary summary;
  CHECK_THROWS_AS(emit_outputs(summary, {}, "/proc/not/a/writable/path"),
                  std::runtime_error);
}

TEST_CASE("config files override the defaults field by field") {
  const auto path = std::filesystem::temp_directory_path() / "femup_config_test.json";
  {
    std::ofstream out(path);
    out << R"({
      "ga": {"mutation_rate": 0.3},
      "run": {"population_size": 12, "max_iter": 77},
      "mesh": {"fuselage_elements": 6, "wing_elements": 6, "vtp_elements": 2, "htp_elements": 2},
      "measured_hz": [1.0, 2.0, 3.0]
    })";
  }
  const HarnessConfig config = load_config(path);
  CHECK(config.algos.ga.mutation_rate == 0.3);
  CHECK(config.algos.ga.selection_rate == 0.5);
  CHECK(config.run.population_size == 12);
  CHECK(config.run.max_iter == 77);
  CHECK(config.problem.mesh.fuselage_elements == 6);
  CHECK(config.problem.n_modes == 3);
  CHECK(config.problem.measured_hz == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(config.algos.fss.step_ind_init.size() == 8);
  std::filesystem::remove(path);

  CHECK_THROWS(load_config(std::filesystem::path("/nonexistent/config.json")));
}

TEST_CASE("default problem matches the benchmark protocol") {
  const UpdatingProblem problem = default_garteur_problem();
  CHECK(problem.measured_hz.size() == 10);
  CHECK(problem.measured_hz.front() == 6.51);
  CHECK(problem.measured_hz.back() == 69.39);
  CHECK(problem.search_space.min_position[0] == 2000.0);
  CHECK(problem.search_space.max_position[0] == 3000.0);
  CHECK(problem.search_space.max_velocity[0] == 10.0);
  CHECK(problem.search_space.max_velocity[3] == 0.05e-7);
  CHECK(problem.initial_vector.rho == 2700.0);
  CHECK(problem.initial_vector.l_itors == 4.0e-8);
  const FssSettings fss = default_fss_settings(problem.search_space);
  CHECK(fss.step_ind_init[0] == 30.0);
  CHECK(fss.step_ind_init[3] == 0.08e-7);
  CHECK(fss.step_ind_final[0] == 3.0);
}
