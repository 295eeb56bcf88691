#pragma once

#include <filesystem>

#include "femup/harness.hpp"

namespace femup {

/// Everything a benchmark run needs: the problem definition, the
/// per-algorithm parameters and the run protocol.
struct HarnessConfig {
  UpdatingProblem problem;
  AlgoSettings algos;
  RunSettings run;
};

HarnessConfig default_harness_config();

/// Reads a JSON config file; every field is optional and overrides the
/// defaults. Recognized keys:
///   bounds:   { min_position[], max_position[], max_velocity[] }
///   fss:      { step_ind_init[], step_ind_final[], step_vol_init,
///               step_vol_final, w_scale, beta_local, beta_global,
///               beta_default }
///   pso:      { c1, c2 }
///   ga:       { mutation_rate, selection_rate, elite_count }
///   run:      { population_size, max_iter }
///   measured_hz: []
///   mesh:     { fuselage_elements, wing_elements, vtp_elements,
///               htp_elements }
HarnessConfig load_config(const std::filesystem::path& path);

}  // namespace femup
