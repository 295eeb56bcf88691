#include "femup/fss.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace femup {

namespace {

double total_weight(const SchoolState& school) {
  double sum = 0.0;
  for (const auto& f : school.fish) sum += f.weight;
  return sum;
}

void note_evaluation(SchoolState& school, const Fish& fish) {
  const double cost = -fish.fitness;
  if (cost < school.global_best.cost) {
    school.global_best.position = fish.position;
    school.global_best.cost = cost;
  }
}

// Index of the fish whose current fitness equals the school-best-ever
// fitness, lowest index first; -1 when no fish currently sits on it.
int global_best_holder(const SchoolState& school) {
  const double best_fitness = -school.global_best.cost;
  for (std::size_t i = 0; i < school.fish.size(); ++i)
    if (school.fish[i].fitness == best_fitness) return static_cast<int>(i);
  return -1;
}

}  // namespace

void FssSettings::validate(const SearchSpace& space) const {
  if (step_ind_init.size() != space.dim() || step_ind_final.size() != space.dim())
    throw std::invalid_argument("step_ind arrays must cover every dimension");
  for (std::size_t d = 0; d < space.dim(); ++d) {
    if (step_ind_init[d] < 0.0 || step_ind_final[d] < 0.0)
      throw std::invalid_argument("step_ind must be non-negative");
    if (step_ind_final[d] > step_ind_init[d])
      throw std::invalid_argument("step_ind must not grow over the run");
  }
  if (step_vol_init < 0.0 || step_vol_final < 0.0 || step_vol_final > step_vol_init)
    throw std::invalid_argument("step_vol must be non-negative and non-increasing");
  if (w_scale <= kFishWeightMin) throw std::invalid_argument("w_scale must exceed the minimum weight");
}

void individual_movement_step(Fish& fish, std::span<const double> step_ind_now,
                              std::span<const double> draws, const SearchSpace& space,
                              Objective& objective) {
  const std::size_t dim = fish.position.size();
  if (step_ind_now.size() != dim || draws.size() != dim)
    throw std::invalid_argument("individual movement dimension mismatch");

  std::vector<double> candidate(dim);
  for (std::size_t d = 0; d < dim; ++d)
    candidate[d] = fish.position[d] + draws[d] * step_ind_now[d];
  clamp_in_place(candidate, space);

  const double candidate_fitness = -objective(candidate);
  if (candidate_fitness > fish.fitness) {
    fish.last_displacement.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
      fish.last_displacement[d] = candidate[d] - fish.position[d];
    fish.last_fitness_delta = candidate_fitness - fish.fitness;
    fish.position = std::move(candidate);
    fish.fitness = candidate_fitness;
    fish.personal_best_fitness = std::max(fish.personal_best_fitness, fish.fitness);
  } else {
    fish.last_displacement.assign(dim, 0.0);
    fish.last_fitness_delta = 0.0;
  }
}

void individual_movement(Fish& fish, std::span<const double> step_ind_now,
                         const SearchSpace& space, Objective& objective, Rng& rng) {
  std::vector<double> draws(fish.position.size());
  for (auto& u : draws) u = uniform_real(rng, -1.0, 1.0);
  individual_movement_step(fish, step_ind_now, draws, space, objective);
}

void feed(SchoolState& school, const FssSettings& settings, FeedMode mode) {
  double max_abs_delta = 0.0;
  for (const auto& f : school.fish)
    max_abs_delta = std::max(max_abs_delta, std::abs(f.last_fitness_delta));
  if (max_abs_delta == 0.0) return;

  const int best_holder = mode == FeedMode::biased ? global_best_holder(school) : -1;
  for (std::size_t i = 0; i < school.fish.size(); ++i) {
    Fish& f = school.fish[i];
    double beta = settings.beta_default;
    if (mode == FeedMode::biased) {
      if (static_cast<int>(i) == best_holder)
        beta = settings.beta_global;
      else if (f.fitness == f.personal_best_fitness)
        beta = settings.beta_local;
    }
    f.weight += beta * f.last_fitness_delta / max_abs_delta;
    f.weight = std::clamp(f.weight, kFishWeightMin, settings.w_scale);
  }
}

std::vector<double> instinctive_drift(const SchoolState& school) {
  const std::size_t dim = school.fish.front().position.size();
  std::vector<double> drift(dim, 0.0);
  double delta_sum = 0.0;
  for (const auto& f : school.fish) delta_sum += f.last_fitness_delta;
  if (delta_sum == 0.0) return drift;
  for (const auto& f : school.fish)
    for (std::size_t d = 0; d < dim; ++d)
      drift[d] += f.last_displacement[d] * f.last_fitness_delta;
  for (auto& c : drift) c /= delta_sum;
  return drift;
}

void collective_instinctive_movement(SchoolState& school, const SearchSpace& space) {
  const std::vector<double> drift = instinctive_drift(school);
  for (auto& f : school.fish) {
    for (std::size_t d = 0; d < drift.size(); ++d) f.position[d] += drift[d];
    clamp_in_place(f.position, space);
  }
}

std::vector<double> compute_barycenter(const SchoolState& school) {
  const std::size_t dim = school.fish.front().position.size();
  std::vector<double> barycenter(dim, 0.0);
  double weight_sum = 0.0;
  for (const auto& f : school.fish) {
    weight_sum += f.weight;
    for (std::size_t d = 0; d < dim; ++d) barycenter[d] += f.position[d] * f.weight;
  }
  for (auto& c : barycenter) c /= weight_sum;
  return barycenter;
}

void volitive_step(Fish& fish, std::span<const double> barycenter,
                   std::span<const double> step_vol_abs, double draw,
                   bool weight_increased, const SearchSpace& space) {
  double dist_sq = 0.0;
  for (std::size_t d = 0; d < barycenter.size(); ++d) {
    const double delta = fish.position[d] - barycenter[d];
    dist_sq += delta * delta;
  }
  const double dist = std::sqrt(dist_sq);
  if (dist == 0.0) return;

  const double sign = weight_increased ? -1.0 : 1.0;
  for (std::size_t d = 0; d < barycenter.size(); ++d) {
    const double direction = (fish.position[d] - barycenter[d]) / dist;
    fish.position[d] += sign * step_vol_abs[d] * draw * direction;
  }
  clamp_in_place(fish.position, space);
}

void collective_volitive_movement(SchoolState& school, std::span<const double> step_vol_abs,
                                  bool weight_increased, const SearchSpace& space, Rng& rng) {
  for (auto& f : school.fish) {
    const double draw = uniform_real(rng, 0.0, 1.0);
    volitive_step(f, school.barycenter, step_vol_abs, draw, weight_increased, space);
  }
}

void fss_iteration(SchoolState& school, int iter, const FssSettings& settings,
                   const RunSettings& run, const SearchSpace& space, Objective& objective,
                   Rng& rng) {
  const std::size_t dim = space.dim();
  std::vector<double> step_ind_now(dim);
  for (std::size_t d = 0; d < dim; ++d)
    step_ind_now[d] =
        linear_schedule(settings.step_ind_init[d], settings.step_ind_final[d], iter, run.max_iter);
  const double vol_fraction =
      linear_schedule(settings.step_vol_init, settings.step_vol_final, iter, run.max_iter);
  std::vector<double> step_vol_abs(dim);
  for (std::size_t d = 0; d < dim; ++d) step_vol_abs[d] = vol_fraction * space.width(d);

  school.total_weight_prev = total_weight(school);

  for (auto& f : school.fish) {
    individual_movement(f, step_ind_now, space, objective, rng);
    note_evaluation(school, f);
  }

  feed(school, settings, settings.bias_enabled ? FeedMode::biased : FeedMode::plain);
  school.total_weight_curr = total_weight(school);

  collective_instinctive_movement(school, space);
  school.barycenter = compute_barycenter(school);
  collective_volitive_movement(school, step_vol_abs,
                               school.total_weight_curr > school.total_weight_prev, space, rng);

  for (auto& f : school.fish) {
    f.fitness = -objective(f.position);
    f.personal_best_fitness = std::max(f.personal_best_fitness, f.fitness);
    note_evaluation(school, f);
  }
}

RunRecord run_fss(const SearchSpace& space, Objective& objective, const FssSettings& settings,
                  const RunSettings& run, const FssObserver& observer) {
  space.validate();
  run.validate();
  settings.validate(space);

  Rng rng(run.seed);
  const std::uint64_t evaluations_before = objective.evaluations();

  SchoolState school;
  school.fish.resize(static_cast<std::size_t>(run.population_size));
  auto positions = uniform_init(space, run.population_size, rng);
  for (std::size_t i = 0; i < school.fish.size(); ++i) {
    Fish& f = school.fish[i];
    f.position = std::move(positions[i]);
    f.fitness = -objective(f.position);
    f.weight = settings.w_scale / 2.0;
    f.last_displacement.assign(space.dim(), 0.0);
    f.personal_best_fitness = f.fitness;
    note_evaluation(school, f);
  }
  school.barycenter = compute_barycenter(school);
  school.total_weight_prev = school.total_weight_curr = total_weight(school);

  RunRecord record;
  record.algorithm = settings.bias_enabled ? "fssb" : "fss";
  record.seed = run.seed;
  record.best_cost.reserve(run.max_iter);
  record.mean_cost.reserve(run.max_iter);
  auto mean_cost = [&school] {
    double sum = 0.0;
    for (const auto& f : school.fish) sum += -f.fitness;
    return sum / static_cast<double>(school.fish.size());
  };
  record.initial_best_cost = school.global_best.cost;
  record.initial_mean_cost = mean_cost();

  for (int iter = 0; iter < run.max_iter; ++iter) {
    fss_iteration(school, iter, settings, run, space, objective, rng);
    record.best_cost.push_back(school.global_best.cost);
    record.mean_cost.push_back(mean_cost());
    if (observer) observer(iter, school);
  }

  record.best_position = school.global_best.position;
  record.evaluations = objective.evaluations() - evaluations_before;
  return record;
}

}  // namespace femup
