#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <numeric>

#include "femup/config.hpp"
#include "femup/harness.hpp"

namespace py = pybind11;
using namespace femup;

namespace {

RunSettings make_run_settings(int population, int iterations, std::uint64_t seed) {
  RunSettings run;
  run.population_size = population;
  run.max_iter = iterations;
  run.seed = seed;
  return run;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Metaheuristic finite element model updating: FSS/FSSb, PSO and a "
            "real-coded GA on a beam-frame modal model";

  py::class_<SearchSpace>(m, "SearchSpace")
      .def(py::init<>())
      .def_readwrite("min_position", &SearchSpace::min_position)
      .def_readwrite("max_position", &SearchSpace::max_position)
      .def_readwrite("min_velocity", &SearchSpace::min_velocity)
      .def_readwrite("max_velocity", &SearchSpace::max_velocity)
      .def("dim", &SearchSpace::dim)
      .def("validate", &SearchSpace::validate);

  py::class_<fem::ParameterVector>(m, "ParameterVector")
      .def(py::init<>())
      .def_static("nominal", &fem::ParameterVector::nominal)
      .def_static("from_list",
                  [](const std::vector<double>& values) {
                    return fem::ParameterVector::from_span(values);
                  })
      .def("to_list",
           [](const fem::ParameterVector& p) {
             const auto a = p.to_array();
             return std::vector<double>(a.begin(), a.end());
           })
      .def_readwrite("rho", &fem::ParameterVector::rho)
      .def_readwrite("vtp_imin", &fem::ParameterVector::vtp_imin)
      .def_readwrite("l_imin", &fem::ParameterVector::l_imin)
      .def_readwrite("l_imax", &fem::ParameterVector::l_imax)
      .def_readwrite("l_itors", &fem::ParameterVector::l_itors)
      .def_readwrite("r_imin", &fem::ParameterVector::r_imin)
      .def_readwrite("r_imax", &fem::ParameterVector::r_imax)
      .def_readwrite("r_itors", &fem::ParameterVector::r_itors);

  py::class_<fem::GarteurConfig>(m, "GarteurConfig")
      .def(py::init<>())
      .def_readwrite("fuselage_elements", &fem::GarteurConfig::fuselage_elements)
      .def_readwrite("wing_elements", &fem::GarteurConfig::wing_elements)
      .def_readwrite("vtp_elements", &fem::GarteurConfig::vtp_elements)
      .def_readwrite("htp_elements", &fem::GarteurConfig::htp_elements);

  py::class_<UpdatingProblem>(m, "UpdatingProblem")
      .def(py::init<>())
      .def_readwrite("measured_hz", &UpdatingProblem::measured_hz)
      .def_readwrite("search_space", &UpdatingProblem::search_space)
      .def_readwrite("initial_vector", &UpdatingProblem::initial_vector)
      .def_readwrite("n_modes", &UpdatingProblem::n_modes)
      .def_readwrite("mesh", &UpdatingProblem::mesh)
      .def_readonly("truth_position", &UpdatingProblem::truth_position)
      .def("validate", &UpdatingProblem::validate);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("algorithm", &RunRecord::algorithm)
      .def_readonly("seed", &RunRecord::seed)
      .def_readonly("best_cost", &RunRecord::best_cost)
      .def_readonly("mean_cost", &RunRecord::mean_cost)
      .def_readonly("best_position", &RunRecord::best_position)
      .def_readonly("initial_best_cost", &RunRecord::initial_best_cost)
      .def_readonly("initial_mean_cost", &RunRecord::initial_mean_cost)
      .def_readonly("evaluations", &RunRecord::evaluations)
      .def("__eq__", [](const RunRecord& a, const RunRecord& b) { return a == b; });

  py::class_<AlgoSummary>(m, "AlgoSummary")
      .def_readonly("algorithm", &AlgoSummary::algorithm)
      .def_readonly("trials_requested", &AlgoSummary::trials_requested)
      .def_readonly("trials_completed", &AlgoSummary::trials_completed)
      .def_readonly("trials_failed", &AlgoSummary::trials_failed)
      .def_readonly("mean_final_cost", &AlgoSummary::mean_final_cost)
      .def_readonly("std_final_cost", &AlgoSummary::std_final_cost)
      .def_readonly("mean_initial_cost", &AlgoSummary::mean_initial_cost)
      .def_readonly("mean_parameters", &AlgoSummary::mean_parameters)
      .def_readonly("mean_mode_errors", &AlgoSummary::mean_mode_errors)
      .def_readonly("mean_best_trace", &AlgoSummary::mean_best_trace);

  py::class_<BenchmarkSummary>(m, "BenchmarkSummary")
      .def_readonly("trials", &BenchmarkSummary::trials)
      .def_readonly("max_iter", &BenchmarkSummary::max_iter)
      .def_readonly("population_size", &BenchmarkSummary::population_size)
      .def_readonly("per_algorithm", &BenchmarkSummary::per_algorithm);

  m.def("clamp_to_bounds",
        [](const std::vector<double>& x, const SearchSpace& space) {
          return clamp_to_bounds(x, space);
        },
        py::arg("x"), py::arg("space"));
  m.def("linear_schedule", &linear_schedule, py::arg("v_start"), py::arg("v_end"),
        py::arg("iter"), py::arg("max_iter"));
  m.def("inertia_weight", &inertia_weight, py::arg("iter"), py::arg("max_iter"));
  m.def("default_measured_hz", &default_measured_hz);
  m.def("default_search_space", &default_search_space);
  m.def("default_garteur_problem", &default_garteur_problem);
  m.def("total_error_percent",
        [](const std::vector<double>& measured, const std::vector<double>& model) {
          return total_error_percent(measured, model);
        },
        py::arg("measured"), py::arg("model"));
  m.def("model_frequencies",
        [](const fem::ParameterVector& params, int n_modes, const fem::GarteurConfig& config) {
          return fem::model_frequencies(params, n_modes, config).frequencies_hz;
        },
        py::arg("params"), py::arg("n_modes") = 10,
        py::arg("config") = fem::GarteurConfig{});
  m.def("dump_mesh",
        [](const fem::ParameterVector& params, const fem::GarteurConfig& config) {
          return fem::dump_mesh(fem::build_garteur(params, config));
        },
        py::arg("params"), py::arg("config") = fem::GarteurConfig{});
  m.def("evaluate_objective",
        [](const UpdatingProblem& problem, const std::vector<double>& x) {
          Objective objective = make_objective(problem);
          return objective(x);
        },
        py::arg("problem"), py::arg("x"));
  m.def("run_surrogate", &run_surrogate, py::arg("problem_template"), py::arg("truth_seed"));
  m.def("run_trial",
        [](const std::string& algo, const UpdatingProblem& problem, std::uint64_t seed,
           int population, int iterations) {
          const AlgoSettings settings = default_algo_settings(problem.search_space);
          return run_trial(algo_from_string(algo), problem, settings,
                           make_run_settings(population, iterations, seed));
        },
        py::arg("algo"), py::arg("problem"), py::arg("seed") = 1, py::arg("population") = 20,
        py::arg("iterations") = 500);
  m.def("run_benchmark",
        [](const UpdatingProblem& problem, const std::vector<std::string>& algos, int trials,
           std::uint64_t first_seed, int population, int iterations) {
          std::vector<Algo> parsed;
          for (const auto& name : algos) parsed.push_back(algo_from_string(name));
          std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
          std::iota(seeds.begin(), seeds.end(), first_seed);
          const AlgoSettings settings = default_algo_settings(problem.search_space);
          BenchmarkResult result = run_benchmark(problem, parsed, trials, seeds, settings,
                                                 make_run_settings(population, iterations, 1));
          return py::make_tuple(result.summary, result.records);
        },
        py::arg("problem"), py::arg("algos"), py::arg("trials") = 30, py::arg("first_seed") = 1,
        py::arg("population") = 20, py::arg("iterations") = 500);
  m.def("trace_csv", &trace_csv, py::arg("records"));
  m.def("emit_outputs", &emit_outputs, py::arg("summary"), py::arg("records"),
        py::arg("out_dir"));
}
