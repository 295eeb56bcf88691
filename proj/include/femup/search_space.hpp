#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace femup {

/// Single per-trial random source. Every stochastic operation of a trial
/// draws from one generator in a fixed, documented order so that runs with
/// equal seeds reproduce bit for bit.
using Rng = std::mt19937_64;

double uniform_real(Rng& rng, double lo, double hi);
double normal_real(Rng& rng, double mean, double stddev);

/// Box-bounded continuous search space. Velocity bounds are optional and,
/// when present, must be symmetric about zero per dimension.
struct SearchSpace {
  std::vector<double> min_position;
  std::vector<double> max_position;
  std::vector<double> min_velocity;
  std::vector<double> max_velocity;

  std::size_t dim() const { return min_position.size(); }
  bool has_velocity_bounds() const { return !max_velocity.empty(); }
  double width(std::size_t d) const { return max_position[d] - min_position[d]; }

  /// Throws std::invalid_argument on empty or inverted bounds, or on
  /// asymmetric velocity limits.
  void validate() const;
};

/// Coerce each component of x into its [min, max] interval. Components
/// already inside the box are returned unchanged. Idempotent.
std::vector<double> clamp_to_bounds(std::span<const double> x, const SearchSpace& space);
void clamp_in_place(std::vector<double>& x, const SearchSpace& space);

/// Draw n positions uniformly inside the box. Draw order: point-major,
/// dimension-minor.
std::vector<std::vector<double>> uniform_init(const SearchSpace& space, int n, Rng& rng);

/// v_start + (v_end - v_start) * iter / max_iter, exact at both endpoints.
double linear_schedule(double v_start, double v_end, int iter, int max_iter);

struct Candidate {
  std::vector<double> position;
  double cost = std::numeric_limits<double>::infinity();

  bool operator==(const Candidate&) const = default;
};

struct RunSettings {
  int population_size = 20;
  int max_iter = 500;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Trace of one seeded optimization trial. best_cost is the best-so-far
/// cost after each iteration and is therefore non-increasing; mean_cost is
/// the population mean at that iteration.
struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<double> best_cost;
  std::vector<double> mean_cost;
  std::vector<double> best_position;
  double initial_best_cost = std::numeric_limits<double>::infinity();
  double initial_mean_cost = std::numeric_limits<double>::infinity();
  std::uint64_t evaluations = 0;

  bool operator==(const RunRecord&) const = default;
};

/// Cost function wrapper that counts evaluations. Costs are minimized
/// throughout; algorithms that speak in fitness use fitness = -cost.
class Objective {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  explicit Objective(Fn fn) : fn_(std::move(fn)) {}

  double operator()(std::span<const double> x) {
    ++evaluations_;
    return fn_(x);
  }

  std::uint64_t evaluations() const { return evaluations_; }

 private:
  Fn fn_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace femup
