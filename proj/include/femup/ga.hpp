#pragma once

#include <span>
#include <utility>
#include <vector>

#include "femup/search_space.hpp"

namespace femup {

struct Individual {
  std::vector<double> chromosome;
  double cost = 0.0;
};

struct GaSettings {
  double mutation_rate = 0.2;   // per-gene mutation probability
  double selection_rate = 0.5;  // fraction of the population kept as parents
  int elite_count = 1;
  double blend_alpha = 0.5;     // blend crossover expansion
  double mutation_scale = 0.05; // perturbation stddev as a fraction of bound width

  void validate() const;
};

/// Truncation selection: the best ceil(selection_rate * N) individuals of a
/// population already sorted by ascending cost.
std::vector<Individual> select(const std::vector<Individual>& sorted_population,
                               double selection_rate);

/// Blend crossover with the per-gene mix values supplied explicitly: the
/// first child's gene is a + u*(b - a), the second's b + u*(a - b). Both
/// children are clamped to bounds.
std::pair<Individual, Individual> crossover_blend(const Individual& parent_a,
                                                  const Individual& parent_b,
                                                  std::span<const double> mix,
                                                  const SearchSpace& space);

/// RNG variant; draws one mix value per gene uniformly from
/// [-blend_alpha, 1 + blend_alpha].
std::pair<Individual, Individual> crossover(const Individual& parent_a,
                                            const Individual& parent_b,
                                            const GaSettings& settings, const SearchSpace& space,
                                            Rng& rng);

/// Independently perturbs each gene with probability mutation_rate by a
/// zero-mean normal draw scaled to mutation_scale of the gene's bound
/// width, clamped to bounds. Per gene: one gate draw, then (if mutating)
/// one normal draw.
void mutate(Individual& individual, const GaSettings& settings, const SearchSpace& space,
            Rng& rng);

/// One generation: elite carried over unchanged, the remainder refilled by
/// crossover of parents drawn uniformly from the truncation pool, mutation
/// applied to every non-elite offspring, offspring evaluated.
std::vector<Individual> ga_generation(std::vector<Individual> population,
                                      const GaSettings& settings, const RunSettings& run,
                                      const SearchSpace& space, Objective& objective, Rng& rng);

using GaObserver = std::function<void(int iter, const std::vector<Individual>&)>;

/// Full seeded trial. RNG order: initial chromosomes (individual-major,
/// gene-minor), then per generation: two parent indices per offspring pair,
/// the per-gene mix values, then per non-elite individual the mutation
/// draws in gene order.
RunRecord run_ga(const SearchSpace& space, Objective& objective, const GaSettings& settings,
                 const RunSettings& run, const GaObserver& observer = {});

}  // namespace femup
