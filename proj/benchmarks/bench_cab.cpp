#include <benchmark/benchmark.h>

#include <vector>

#include "cab/algorithm.hpp"
#include "cab/functions.hpp"

using namespace cab;

namespace {

void BM_Evaluate(benchmark::State& state) {
  const FunctionId id = kAllFunctions[static_cast<std::size_t>(state.range(0))];
  const ObjectiveSpec& spec = spec_of(id);
  std::vector<double> x(spec.dimension);
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = spec.bounds.lower(j) + 0.37 * spec.bounds.width(j);
  }
  const Objective target = maximization_target(id);
  for (auto _ : state) {
    benchmark::DoNotOptimize(target(x));
  }
  state.SetLabel(std::string(function_name(id)));
}
BENCHMARK(BM_Evaluate)->DenseRange(0, 8);

void BM_NearestMemoryElement(benchmark::State& state) {
  const int memory_size = static_cast<int>(state.range(0));
  RandomSource rng(4);
  std::vector<Individual> memory;
  for (int i = 0; i < memory_size; ++i) {
    memory.push_back({{rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.unit()});
  }
  const Individual probe{{0.3, -0.7}, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(&nearest_memory_element(probe, memory));
  }
}
BENCHMARK(BM_NearestMemoryElement)->Arg(10)->Arg(100)->Arg(200);

void BM_DominanceFilter(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  RandomSource rng(9);
  std::vector<Individual> elements;
  for (int i = 0; i < count; ++i) {
    elements.push_back({{rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.uniform(0, 10)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominance_filter(elements, 0.8));
  }
}
BENCHMARK(BM_DominanceFilter)->Arg(20)->Arg(200)->Arg(400);

void BM_FullIteration(benchmark::State& state) {
  const ObjectiveSpec& spec = spec_of(FunctionId::Example);
  const Objective objective = maximization_target(FunctionId::Example);
  Params params;
  params.population_size = static_cast<int>(state.range(0));
  params.memory_size = params.population_size / 2;
  params.seed = 11;
  const double rho = dominance_radius(spec.bounds);
  RunState run_state = init_population(spec.bounds, params, objective);
  for (auto _ : state) {
    std::vector<Individual> next = keep_best(run_state, spec.bounds, params, objective);
    std::vector<Individual> moved =
        generate_offspring(run_state, spec.bounds, params, objective);
    next.insert(next.end(), std::make_move_iterator(moved.begin()),
                std::make_move_iterator(moved.end()));
    update_memories(run_state, std::move(next), rho);
    ++run_state.iteration;
  }
  state.SetItemsProcessed(state.iterations() * params.population_size);
}
BENCHMARK(BM_FullIteration)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
