#include "femup/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace femup {

namespace {

using nlohmann::json;

template <typename T>
void maybe(const json& node, const char* key, T& value) {
  if (node.contains(key)) value = node.at(key).get<T>();
}

}  // namespace

HarnessConfig default_harness_config() {
  HarnessConfig config;
  config.problem = default_garteur_problem();
  config.algos = default_algo_settings(config.problem.search_space);
  config.run = RunSettings{};
  return config;
}

HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  json root = json::parse(in);

  HarnessConfig config = default_harness_config();
  bool bounds_changed = false;

  if (root.contains("bounds")) {
    const json& bounds = root.at("bounds");
    SearchSpace& space = config.problem.search_space;
    maybe(bounds, "min_position", space.min_position);
    maybe(bounds, "max_position", space.max_position);
    if (bounds.contains("max_velocity")) {
      space.max_velocity = bounds.at("max_velocity").get<std::vector<double>>();
      space.min_velocity.resize(space.max_velocity.size());
      for (std::size_t d = 0; d < space.max_velocity.size(); ++d)
        space.min_velocity[d] = -space.max_velocity[d];
    }
    space.validate();
    bounds_changed = true;
  }
  if (bounds_changed) config.algos = default_algo_settings(config.problem.search_space);

  if (root.contains("fss")) {
    const json& fss = root.at("fss");
    maybe(fss, "step_ind_init", config.algos.fss.step_ind_init);
    maybe(fss, "step_ind_final", config.algos.fss.step_ind_final);
    maybe(fss, "step_vol_init", config.algos.fss.step_vol_init);
    maybe(fss, "step_vol_final", config.algos.fss.step_vol_final);
    maybe(fss, "w_scale", config.algos.fss.w_scale);
    maybe(fss, "beta_local", config.algos.fss.beta_local);
    maybe(fss, "beta_global", config.algos.fss.beta_global);
    maybe(fss, "beta_default", config.algos.fss.beta_default);
  }
  if (root.contains("pso")) {
    const json& pso = root.at("pso");
    maybe(pso, "c1", config.algos.pso.c1);
    maybe(pso, "c2", config.algos.pso.c2);
  }
  if (root.contains("ga")) {
    const json& ga = root.at("ga");
    maybe(ga, "mutation_rate", config.algos.ga.mutation_rate);
    maybe(ga, "selection_rate", config.algos.ga.selection_rate);
    maybe(ga, "elite_count", config.algos.ga.elite_count);
  }
  if (root.contains("run")) {
    const json& run = root.at("run");
    maybe(run, "population_size", config.run.population_size);
    maybe(run, "max_iter", config.run.max_iter);
  }
  maybe(root, "measured_hz", config.problem.measured_hz);
  if (root.contains("measured_hz"))
    config.problem.n_modes = static_cast<int>(config.problem.measured_hz.size());
  if (root.contains("mesh")) {
    const json& mesh = root.at("mesh");
    maybe(mesh, "fuselage_elements", config.problem.mesh.fuselage_elements);
    maybe(mesh, "wing_elements", config.problem.mesh.wing_elements);
    maybe(mesh, "vtp_elements", config.problem.mesh.vtp_elements);
    maybe(mesh, "htp_elements", config.problem.mesh.htp_elements);
  }

  config.problem.validate();
  return config;
}

}  // namespace femup
