#include "cab/algorithm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cab {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum;
}

void sort_by_fitness(std::vector<Individual>& individuals) {
  std::stable_sort(individuals.begin(), individuals.end(),
                   [](const Individual& a, const Individual& b) { return a.fitness > b.fitness; });
}

}  // namespace

double dominance_radius(const SearchBounds& bounds) {
  double volume = 1.0;
  for (std::size_t j = 0; j < bounds.dimension(); ++j) {
    volume *= bounds.width(j);
  }
  return volume / (10.0 * static_cast<double>(bounds.dimension()));
}

RunState init_population(const SearchBounds& bounds, const Params& params,
                         const Objective& objective) {
  params.validate();
  if (objective.dimension != bounds.dimension()) {
    throw std::invalid_argument("objective dimension does not match the bounds");
  }

  RunState state;
  state.rng = RandomSource(params.seed);
  state.population.reserve(params.population_size);
  const std::size_t dim = bounds.dimension();
  for (int i = 0; i < params.population_size; ++i) {
    std::vector<double> position(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      position[j] = state.rng.uniform(bounds.lower(j), bounds.upper(j));
    }
    const double fitness = objective(position);
    ++state.eval_count;
    state.population.push_back({std::move(position), fitness});
  }
  sort_by_fitness(state.population);

  const auto top = state.population.begin();
  state.archive.generation_best.assign(top, top + params.memory_size);
  state.archive.historic_best.assign(top, top + params.memory_size);
  return state;
}

std::vector<Individual> keep_best(RunState& state, const SearchBounds& bounds,
                                  const Params& params, const Objective& objective) {
  std::vector<Individual> children;
  children.reserve(state.archive.historic_best.size());
  for (const Individual& elder : state.archive.historic_best) {
    std::vector<double> position = elder.position;
    for (std::size_t j = 0; j < position.size(); ++j) {
      const double scale = params.perturb_fraction * bounds.width(j);
      position[j] += state.rng.uniform(-scale, scale);
    }
    bounds.clamp(position);
    const double fitness = objective(position);
    ++state.eval_count;
    children.push_back({std::move(position), fitness});
  }
  return children;
}

const Individual& nearest_memory_element(const Individual& x,
                                         std::span<const Individual> memory) {
  if (memory.empty()) {
    throw std::logic_error("nearest_memory_element: memory is empty");
  }
  std::size_t best = 0;
  double best_distance = squared_distance(x.position, memory[0].position);
  for (std::size_t i = 1; i < memory.size(); ++i) {
    const double d = squared_distance(x.position, memory[i].position);
    if (d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return memory[best];
}

std::vector<double> attraction_move(std::span<const double> x,
                                    std::span<const double> target, double r) {
  std::vector<double> moved(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    moved[j] = x[j] + r * (target[j] - x[j]);
  }
  return moved;
}

std::vector<Individual> generate_offspring(RunState& state, const SearchBounds& bounds,
                                           const Params& params, const Objective& objective) {
  const std::size_t dim = bounds.dimension();
  // keep_best produced one child per historic element; the offspring fill the
  // rest of the generation, so every iteration evaluates exactly Np times.
  const int first = static_cast<int>(state.archive.historic_best.size());
  std::vector<Individual> children;
  children.reserve(params.population_size - first);
  for (int i = first; i < params.population_size; ++i) {
    const Individual& parent = state.population[i];
    std::vector<double> position;
    if (state.rng.unit() < 1.0 - params.random_prob) {
      const bool use_historic = state.rng.unit() < params.history_prob;
      const auto& memory =
          use_historic ? state.archive.historic_best : state.archive.generation_best;
      const Individual& target = nearest_memory_element(parent, memory);
      position = attraction_move(parent.position, target.position, state.rng.signed_unit());
      bounds.clamp(position);
    } else {
      position.resize(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        position[j] = state.rng.uniform(bounds.lower(j), bounds.upper(j));
      }
    }
    const double fitness = objective(position);
    ++state.eval_count;
    children.push_back({std::move(position), fitness});
  }
  return children;
}

DominanceSplit dominance_filter(std::vector<Individual> elements, double rho) {
  sort_by_fitness(elements);
  DominanceSplit split;
  split.kept.reserve(elements.size());
  const double rho_sq = rho * rho;
  for (Individual& element : elements) {
    bool dominated = false;
    for (const Individual& survivor : split.kept) {
      if (squared_distance(element.position, survivor.position) < rho_sq) {
        dominated = true;
        break;
      }
    }
    (dominated ? split.removed : split.kept).push_back(std::move(element));
  }
  return split;
}

const MemoryArchive& update_memories(RunState& state,
                                     std::vector<Individual> new_population, double rho) {
  sort_by_fitness(new_population);
  MemoryArchive& archive = state.archive;
  // The generation memory always holds exactly B elements and so defines the
  // capacity; the historic memory may be running below it.
  const std::size_t b =
      std::max(archive.generation_best.size(), archive.historic_best.size());
  const std::size_t g = std::min(b, new_population.size());
  archive.generation_best.assign(new_population.begin(), new_population.begin() + g);

  std::vector<Individual> merged = archive.historic_best;
  merged.insert(merged.end(), archive.generation_best.begin(), archive.generation_best.end());
  DominanceSplit split = dominance_filter(std::move(merged), rho);

  // The historic memory holds only filter survivors, at most B of them. It
  // may dip below B after heavy competition and grows back as offspring
  // settle new niches; padding it with dominated duplicates would wall off
  // any niche whose peak fitness is below the duplicates' value.
  const std::size_t keep = std::min(b, split.kept.size());
  split.kept.resize(keep);
  archive.historic_best = std::move(split.kept);
  state.population = std::move(new_population);
  return archive;
}

std::vector<Individual> extract_optima(const std::vector<Individual>& historic) {
  if (historic.empty()) return {};
  double max_fitness = historic.front().fitness;
  double min_fitness = historic.front().fitness;
  for (const Individual& element : historic) {
    max_fitness = std::max(max_fitness, element.fitness);
    min_fitness = std::min(min_fitness, element.fitness);
  }

  double threshold;
  if (max_fitness > 0.0) {
    threshold = max_fitness / 6.0;
  } else if (max_fitness > min_fitness) {
    // The plain max/6 rule is meaningless for non-positive fitness; keep the
    // top five sixths of the observed range instead.
    threshold = min_fitness + (max_fitness - min_fitness) / 6.0;
  } else {
    return historic;  // indistinguishable plateau
  }

  std::vector<Individual> optima;
  for (const Individual& element : historic) {
    if (element.fitness > threshold) optima.push_back(element);
  }
  return optima;
}

PlateauStop::PlateauStop(int window, int warmup, int hard_cap,
                         std::function<int(const RunState&)> progress)
    : window_(window), warmup_(warmup), hard_cap_(hard_cap), progress_(std::move(progress)) {
  if (window_ < 1) throw std::invalid_argument("plateau: window must be at least 1");
  if (warmup_ < 0) throw std::invalid_argument("plateau: warmup must be non-negative");
  if (hard_cap_ <= warmup_) throw std::invalid_argument("plateau: hard_cap must exceed warmup");
  if (!progress_) throw std::invalid_argument("plateau: progress callback is required");
}

bool PlateauStop::should_stop(const RunState& state) {
  if (state.iteration >= hard_cap_) return true;
  const int count = progress_(state);
  if (seen_any_ && count == last_count_) {
    ++stable_for_;
  } else {
    last_count_ = count;
    stable_for_ = 0;
    seen_any_ = true;
  }
  return state.iteration >= warmup_ && stable_for_ >= window_;
}

RunResult run(const Objective& objective, const SearchBounds& bounds, const Params& params,
              StopPolicy& stop) {
  const auto started = std::chrono::steady_clock::now();
  RunState state = init_population(bounds, params, objective);
  const double rho = params.rho_override ? *params.rho_override : dominance_radius(bounds);

  while (!stop.should_stop(state)) {
    std::vector<Individual> next = keep_best(state, bounds, params, objective);
    std::vector<Individual> moved = generate_offspring(state, bounds, params, objective);
    next.insert(next.end(), std::make_move_iterator(moved.begin()),
                std::make_move_iterator(moved.end()));
    update_memories(state, std::move(next), rho);
    ++state.iteration;
  }

  RunResult result;
  result.final_historic = state.archive.historic_best;
  result.final_population = std::move(state.population);
  result.optima = extract_optima(result.final_historic);
  result.eval_count = state.eval_count;
  result.iterations = state.iteration;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace cab
