#include "femup/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace femup {

void GaSettings::validate() const {
  if (selection_rate <= 0.0 || selection_rate > 1.0)
    throw std::invalid_argument("selection_rate must lie in (0, 1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw std::invalid_argument("mutation_rate must lie in [0, 1]");
  if (elite_count < 0) throw std::invalid_argument("elite_count must be non-negative");
  if (blend_alpha < 0.0) throw std::invalid_argument("blend_alpha must be non-negative");
  if (mutation_scale < 0.0) throw std::invalid_argument("mutation_scale must be non-negative");
}

std::vector<Individual> select(const std::vector<Individual>& sorted_population,
                               double selection_rate) {
  if (sorted_population.empty()) throw std::invalid_argument("cannot select from an empty population");
  const auto pool_size = static_cast<std::size_t>(
      std::ceil(selection_rate * static_cast<double>(sorted_population.size())));
  return {sorted_population.begin(),
          sorted_population.begin() + static_cast<std::ptrdiff_t>(std::max<std::size_t>(pool_size, 1))};
}

std::pair<Individual, Individual> crossover_blend(const Individual& parent_a,
                                                  const Individual& parent_b,
                                                  std::span<const double> mix,
                                                  const SearchSpace& space) {
  const std::size_t dim = parent_a.chromosome.size();
  if (parent_b.chromosome.size() != dim || mix.size() != dim)
    throw std::invalid_argument("crossover dimension mismatch");
  Individual child_a, child_b;
  child_a.chromosome.resize(dim);
  child_b.chromosome.resize(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const double a = parent_a.chromosome[d];
    const double b = parent_b.chromosome[d];
    child_a.chromosome[d] = a + mix[d] * (b - a);
    child_b.chromosome[d] = b + mix[d] * (a - b);
  }
  clamp_in_place(child_a.chromosome, space);
  clamp_in_place(child_b.chromosome, space);
  return {std::move(child_a), std::move(child_b)};
}

std::pair<Individual, Individual> crossover(const Individual& parent_a,
                                            const Individual& parent_b,
                                            const GaSettings& settings, const SearchSpace& space,
                                            Rng& rng) {
  std::vector<double> mix(parent_a.chromosome.size());
  for (auto& u : mix) u = uniform_real(rng, -settings.blend_alpha, 1.0 + settings.blend_alpha);
  return crossover_blend(parent_a, parent_b, mix, space);
}

void mutate(Individual& individual, const GaSettings& settings, const SearchSpace& space,
            Rng& rng) {
  for (std::size_t d = 0; d < individual.chromosome.size(); ++d) {
    if (uniform_real(rng, 0.0, 1.0) < settings.mutation_rate) {
      individual.chromosome[d] += normal_real(rng, 0.0, settings.mutation_scale * space.width(d));
      individual.chromosome[d] =
          std::clamp(individual.chromosome[d], space.min_position[d], space.max_position[d]);
    }
  }
}

std::vector<Individual> ga_generation(std::vector<Individual> population,
                                      const GaSettings& settings, const RunSettings& run,
                                      const SearchSpace& space, Objective& objective, Rng& rng) {
  // Stable sort keeps equal-cost individuals in index order.
  std::stable_sort(population.begin(), population.end(),
                   [](const Individual& a, const Individual& b) { return a.cost < b.cost; });
  const std::vector<Individual> pool = select(population, settings.selection_rate);

  const auto n = population.size();
  const auto elite =
      std::min<std::size_t>(static_cast<std::size_t>(settings.elite_count), n);
  std::vector<Individual> next(population.begin(), population.begin() + static_cast<std::ptrdiff_t>(elite));
  next.reserve(n);

  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  while (next.size() < n) {
    const Individual& parent_a = pool[pick(rng)];
    const Individual& parent_b = pool[pick(rng)];
    auto [child_a, child_b] = crossover(parent_a, parent_b, settings, space, rng);
    next.push_back(std::move(child_a));
    if (next.size() < n) next.push_back(std::move(child_b));
  }

  for (std::size_t i = elite; i < next.size(); ++i) {
    mutate(next[i], settings, space, rng);
    next[i].cost = objective(next[i].chromosome);
  }
  return next;
}

RunRecord run_ga(const SearchSpace& space, Objective& objective, const GaSettings& settings,
                 const RunSettings& run, const GaObserver& observer) {
  space.validate();
  run.validate();
  settings.validate();

  Rng rng(run.seed);
  const std::uint64_t evaluations_before = objective.evaluations();

  std::vector<Individual> population(static_cast<std::size_t>(run.population_size));
  auto positions = uniform_init(space, run.population_size, rng);
  for (std::size_t i = 0; i < population.size(); ++i) {
    population[i].chromosome = std::move(positions[i]);
    population[i].cost = objective(population[i].chromosome);
  }

  RunRecord record;
  record.algorithm = "ga";
  record.seed = run.seed;
  Candidate best;
  auto update_best = [&best](const std::vector<Individual>& pop) {
    for (const auto& ind : pop) {
      if (ind.cost < best.cost) {
        best.cost = ind.cost;
        best.position = ind.chromosome;
      }
    }
  };
  auto mean_cost = [](const std::vector<Individual>& pop) {
    double sum = 0.0;
    for (const auto& ind : pop) sum += ind.cost;
    return sum / static_cast<double>(pop.size());
  };
  update_best(population);
  record.initial_best_cost = best.cost;
  record.initial_mean_cost = mean_cost(population);

  for (int iter = 0; iter < run.max_iter; ++iter) {
    population = ga_generation(std::move(population), settings, run, space, objective, rng);
    update_best(population);
    record.best_cost.push_back(best.cost);
    record.mean_cost.push_back(mean_cost(population));
    if (observer) observer(iter, population);
  }

  record.best_position = best.position;
  record.evaluations = objective.evaluations() - evaluations_before;
  return record;
}

}  // namespace femup
