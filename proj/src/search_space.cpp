#include "femup/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace femup {

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double normal_real(Rng& rng, double mean, double stddev) {
  // A fresh distribution per draw keeps the stream a pure function of the
  // generator state (normal_distribution caches a second variate).
  return std::normal_distribution<double>(mean, stddev)(rng);
}

void SearchSpace::validate() const {
  if (min_position.empty()) throw std::invalid_argument("search space has no dimensions");
  if (max_position.size() != min_position.size())
    throw std::invalid_argument("position bound arrays differ in length");
  for (std::size_t d = 0; d < dim(); ++d) {
    if (!(min_position[d] < max_position[d]))
      throw std::invalid_argument("min_position must be strictly below max_position");
  }
  if (min_velocity.size() != max_velocity.size())
    throw std::invalid_argument("velocity bound arrays differ in length");
  if (has_velocity_bounds()) {
    if (max_velocity.size() != dim())
      throw std::invalid_argument("velocity bounds must cover every dimension");
    for (std::size_t d = 0; d < dim(); ++d) {
      if (!(min_velocity[d] < max_velocity[d]))
        throw std::invalid_argument("min_velocity must be strictly below max_velocity");
      if (min_velocity[d] != -max_velocity[d])
        throw std::invalid_argument("velocity bounds must be symmetric about zero");
    }
  }
}

std::vector<double> clamp_to_bounds(std::span<const double> x, const SearchSpace& space) {
  if (x.size() != space.dim()) throw std::invalid_argument("position has wrong dimension");
  std::vector<double> out(x.begin(), x.end());
  clamp_in_place(out, space);
  return out;
}

void clamp_in_place(std::vector<double>& x, const SearchSpace& space) {
  if (x.size() != space.dim()) throw std::invalid_argument("position has wrong dimension");
  for (std::size_t d = 0; d < x.size(); ++d)
    x[d] = std::clamp(x[d], space.min_position[d], space.max_position[d]);
}

std::vector<std::vector<double>> uniform_init(const SearchSpace& space, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("population size must be at least 1");
  std::vector<std::vector<double>> points(static_cast<std::size_t>(n));
  for (auto& p : points) {
    p.resize(space.dim());
    for (std::size_t d = 0; d < space.dim(); ++d)
      p[d] = uniform_real(rng, space.min_position[d], space.max_position[d]);
  }
  return points;
}

double linear_schedule(double v_start, double v_end, int iter, int max_iter) {
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
  if (iter < 0 || iter > max_iter) throw std::invalid_argument("iter outside [0, max_iter]");
  return v_start + (v_end - v_start) * (static_cast<double>(iter) / max_iter);
}

void RunSettings::validate() const {
  if (population_size < 1) throw std::invalid_argument("population_size must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
}

}  // namespace femup
