#pragma once

#include <span>
#include <vector>

#include "femup/search_space.hpp"

namespace femup {

/// Lower weight bound; the upper bound is FssSettings::w_scale.
inline constexpr double kFishWeightMin = 1.0;

struct Fish {
  std::vector<double> position;
  double fitness = 0.0;  // fitness = -cost
  double weight = 0.0;
  std::vector<double> last_displacement;
  double last_fitness_delta = 0.0;
  double personal_best_fitness = 0.0;
};

struct FssSettings {
  // Individual step amplitude per dimension, in position units, decayed
  // linearly from init to final over the run.
  std::vector<double> step_ind_init;
  std::vector<double> step_ind_final;
  // Volitive step as a fraction of each dimension's bound width.
  double step_vol_init = 0.08;
  double step_vol_final = 0.06;
  double w_scale = 250.0;
  // Weight update bias. With bias disabled every fish feeds with
  // beta_default; with bias enabled the school-best fish feeds with
  // beta_global and fish sitting on their personal best with beta_local.
  bool bias_enabled = false;
  double beta_local = 1.5;
  double beta_global = 2.0;
  double beta_default = 1.0;

  void validate(const SearchSpace& space) const;
};

struct SchoolState {
  std::vector<Fish> fish;
  std::vector<double> barycenter;
  double total_weight_prev = 0.0;
  double total_weight_curr = 0.0;
  Candidate global_best;
};

enum class FeedMode { plain, biased };

/// Greedy individual move with the displacement draws supplied explicitly
/// (one value in [-1, 1] per dimension). The candidate is evaluated once;
/// it replaces the fish only if strictly fitter, otherwise the fish stays
/// put and records zero displacement and zero fitness delta.
void individual_movement_step(Fish& fish, std::span<const double> step_ind_now,
                              std::span<const double> draws, const SearchSpace& space,
                              Objective& objective);

/// RNG variant; draws dimension-major from rng.
void individual_movement(Fish& fish, std::span<const double> step_ind_now,
                         const SearchSpace& space, Objective& objective, Rng& rng);

/// Weight update: w_i += beta_i * df_i / max_j |df_j|, clamped to
/// [kFishWeightMin, w_scale]. Skipped entirely when max_j |df_j| == 0.
void feed(SchoolState& school, const FssSettings& settings, FeedMode mode);

/// Drift vector I = sum_i dx_i * df_i / sum_i df_i; zero when the
/// denominator vanishes (every move rejected).
std::vector<double> instinctive_drift(const SchoolState& school);

/// Shift every fish by the drift vector, clamped to bounds.
void collective_instinctive_movement(SchoolState& school, const SearchSpace& space);

/// Weight-normalized school position: B = sum_i x_i w_i / sum_i w_i.
std::vector<double> compute_barycenter(const SchoolState& school);

/// Volitive displacement of one fish with the [0, 1] draw supplied
/// explicitly. Contracts toward the barycenter when the school gained
/// weight, expands away otherwise; a fish exactly on the barycenter does
/// not move. step_vol_abs is the absolute step per dimension.
void volitive_step(Fish& fish, std::span<const double> barycenter,
                   std::span<const double> step_vol_abs, double draw,
                   bool weight_increased, const SearchSpace& space);

/// Applies volitive_step to the whole school, drawing one value per fish
/// in index order (drawn even for fish on the barycenter, to keep the
/// stream layout independent of the data).
void collective_volitive_movement(SchoolState& school, std::span<const double> step_vol_abs,
                                  bool weight_increased, const SearchSpace& space, Rng& rng);

/// One full swim cycle: individual movement for every fish, feeding,
/// instinctive drift, barycenter, volitive movement, then re-evaluation of
/// every fish. iter is 0-based; step sizes follow linear_schedule(iter).
void fss_iteration(SchoolState& school, int iter, const FssSettings& settings,
                   const RunSettings& run, const SearchSpace& space, Objective& objective,
                   Rng& rng);

using FssObserver = std::function<void(int iter, const SchoolState&)>;

/// Full seeded trial. RNG draw order: initial positions (fish-major,
/// dimension-minor), then per iteration the individual draws (fish-major,
/// dimension-minor) followed by one volitive draw per fish.
RunRecord run_fss(const SearchSpace& space, Objective& objective, const FssSettings& settings,
                  const RunSettings& run, const FssObserver& observer = {});

}  // namespace femup
