#pragma once

#include <span>
#include <vector>

#include "femup/search_space.hpp"

namespace femup {

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> best_position;
  double cost = 0.0;
  double best_cost = 0.0;
};

struct PsoSettings {
  double c1 = 2.0;  // cognitive acceleration
  double c2 = 2.0;  // social acceleration
  // Inertia schedule endpoints; the defaults decay linearly from 1 to 0.
  double inertia_start = 1.0;
  double inertia_end = 0.0;

  void validate() const;
};

struct SwarmState {
  std::vector<Particle> particles;
  Candidate global_best;
};

/// (max_iter - iter) / max_iter: 1 at the first iteration, 0 at the last.
double inertia_weight(int iter, int max_iter);

/// v <- w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x), clamped per dimension
/// to the space's velocity bounds. r1 and r2 are supplied per dimension.
void update_velocity_step(Particle& particle, std::span<const double> global_best_position,
                          double w, const PsoSettings& settings, std::span<const double> r1,
                          std::span<const double> r2, const SearchSpace& space);

/// RNG variant; draws the full r1 vector, then the full r2 vector.
void update_velocity(Particle& particle, std::span<const double> global_best_position, double w,
                     const PsoSettings& settings, const SearchSpace& space, Rng& rng);

/// x <- clamp(x + v).
void update_position(Particle& particle, const SearchSpace& space);

/// Synchronous sweep: every particle moves against the previous iteration's
/// global best, then all are evaluated and the bests refreshed.
void pso_iteration(SwarmState& swarm, int iter, const PsoSettings& settings,
                   const RunSettings& run, const SearchSpace& space, Objective& objective,
                   Rng& rng);

using PsoObserver = std::function<void(int iter, const SwarmState&)>;

/// Full seeded trial. Requires velocity bounds on the space. RNG order:
/// initial positions (particle-major, dimension-minor), initial velocities
/// (same layout), then per iteration and particle r1 followed by r2.
RunRecord run_pso(const SearchSpace& space, Objective& objective, const PsoSettings& settings,
                  const RunSettings& run, const PsoObserver& observer = {});

}  // namespace femup
