#include "femup/pso.hpp"

#include <algorithm>
#include <stdexcept>

namespace femup {

void PsoSettings::validate() const {
  if (c1 < 0.0 || c2 < 0.0) throw std::invalid_argument("acceleration coefficients must be non-negative");
}

double inertia_weight(int iter, int max_iter) {
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
  if (iter < 0 || iter > max_iter) throw std::invalid_argument("iter outside [0, max_iter]");
  return static_cast<double>(max_iter - iter) / static_cast<double>(max_iter);
}

void update_velocity_step(Particle& particle, std::span<const double> global_best_position,
                          double w, const PsoSettings& settings, std::span<const double> r1,
                          std::span<const double> r2, const SearchSpace& space) {
  const std::size_t dim = particle.position.size();
  if (r1.size() != dim || r2.size() != dim || global_best_position.size() != dim)
    throw std::invalid_argument("velocity update dimension mismatch");
  for (std::size_t d = 0; d < dim; ++d) {
    double v = w * particle.velocity[d] +
               settings.c1 * r1[d] * (particle.best_position[d] - particle.position[d]) +
               settings.c2 * r2[d] * (global_best_position[d] - particle.position[d]);
    particle.velocity[d] = std::clamp(v, space.min_velocity[d], space.max_velocity[d]);
  }
}

void update_velocity(Particle& particle, std::span<const double> global_best_position, double w,
                     const PsoSettings& settings, const SearchSpace& space, Rng& rng) {
  const std::size_t dim = particle.position.size();
  std::vector<double> r1(dim), r2(dim);
  for (auto& r : r1) r = uniform_real(rng, 0.0, 1.0);
  for (auto& r : r2) r = uniform_real(rng, 0.0, 1.0);
  update_velocity_step(particle, global_best_position, w, settings, r1, r2, space);
}

void update_position(Particle& particle, const SearchSpace& space) {
  for (std::size_t d = 0; d < particle.position.size(); ++d)
    particle.position[d] += particle.velocity[d];
  clamp_in_place(particle.position, space);
}

void pso_iteration(SwarmState& swarm, int iter, const PsoSettings& settings,
                   const RunSettings& run, const SearchSpace& space, Objective& objective,
                   Rng& rng) {
  const double w = settings.inertia_end +
                   (settings.inertia_start - settings.inertia_end) * inertia_weight(iter, run.max_iter);
  // Synchronous update: all moves use the global best from the previous
  // iteration.
  const std::vector<double> gbest = swarm.global_best.position;

  for (auto& p : swarm.particles) {
    update_velocity(p, gbest, w, settings, space, rng);
    update_position(p, space);
  }
  for (auto& p : swarm.particles) {
    p.cost = objective(p.position);
    if (p.cost < p.best_cost) {
      p.best_cost = p.cost;
      p.best_position = p.position;
    }
  }
  for (const auto& p : swarm.particles) {
    if (p.best_cost < swarm.global_best.cost) {
      swarm.global_best.cost = p.best_cost;
      swarm.global_best.position = p.best_position;
    }
  }
}

RunRecord run_pso(const SearchSpace& space, Objective& objective, const PsoSettings& settings,
                  const RunSettings& run, const PsoObserver& observer) {
  space.validate();
  run.validate();
  settings.validate();
  if (!space.has_velocity_bounds())
    throw std::invalid_argument("swarm optimization requires velocity bounds");

  Rng rng(run.seed);
  const std::uint64_t evaluations_before = objective.evaluations();

  SwarmState swarm;
  swarm.particles.resize(static_cast<std::size_t>(run.population_size));
  auto positions = uniform_init(space, run.population_size, rng);
  for (std::size_t i = 0; i < swarm.particles.size(); ++i)
    swarm.particles[i].position = std::move(positions[i]);
  for (auto& p : swarm.particles) {
    p.velocity.resize(space.dim());
    for (std::size_t d = 0; d < space.dim(); ++d)
      p.velocity[d] = uniform_real(rng, space.min_velocity[d], space.max_velocity[d]);
  }
  for (auto& p : swarm.particles) {
    p.cost = objective(p.position);
    p.best_cost = p.cost;
    p.best_position = p.position;
    if (p.best_cost < swarm.global_best.cost) {
      swarm.global_best.cost = p.best_cost;
      swarm.global_best.position = p.best_position;
    }
  }

  RunRecord record;
  record.algorithm = "pso";
  record.seed = run.seed;
  auto mean_cost = [&swarm] {
    double sum = 0.0;
    for (const auto& p : swarm.particles) sum += p.cost;
    return sum / static_cast<double>(swarm.particles.size());
  };
  record.initial_best_cost = swarm.global_best.cost;
  record.initial_mean_cost = mean_cost();

  for (int iter = 0; iter < run.max_iter; ++iter) {
    pso_iteration(swarm, iter, settings, run, space, objective, rng);
    record.best_cost.push_back(swarm.global_best.cost);
    record.mean_cost.push_back(mean_cost());
    if (observer) observer(iter, swarm);
  }

  record.best_position = swarm.global_best.position;
  record.evaluations = objective.evaluations() - evaluations_before;
  return record;
}

}  // namespace femup
