#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cab/random.hpp"
#include "cab/types.hpp"

namespace cab {

/// Mutable state of a single run. The population is non-increasing by
/// fitness after every sort step, and eval_count equals Np * (iteration + 1)
/// at the end of each iteration (the initial evaluation plus Np per
/// iteration).
struct RunState {
  int iteration = 0;
  std::vector<Individual> population;
  MemoryArchive archive;
  long long eval_count = 0;
  RandomSource rng;
};

/// Default dominance radius: product of axis widths / (10 * D).
double dominance_radius(const SearchBounds& bounds);

/// Uniform random population over the bounds; evaluates, sorts, and fills
/// both memories with the top-B individuals. Sharing the same content is
/// allowed only at this initial stage. eval_count ends at Np.
/// Throws std::invalid_argument on invalid params or a dimension mismatch
/// between bounds and objective.
RunState init_population(const SearchBounds& bounds, const Params& params,
                         const Objective& objective);

/// One perturbed copy per historic-memory element: each coordinate of m_h^l
/// is offset uniformly within perturb_fraction of the axis width, clamped
/// into bounds, and evaluated (adds |M_h| to eval_count).
std::vector<Individual> keep_best(RunState& state, const SearchBounds& bounds,
                                  const Params& params, const Objective& objective);

/// Closest memory element by Euclidean distance; ties go to the lower index,
/// which is the fitter element since memories are fitness-sorted.
/// Throws std::logic_error on an empty memory.
const Individual& nearest_memory_element(const Individual& x,
                                         std::span<const Individual> memory);

/// x + r * (target - x), unclamped. For r in [-1, 1] the result lies on the
/// line through x and target within |target - x| of x; positive r attracts,
/// negative r repels.
std::vector<double> attraction_move(std::span<const double> x,
                                    std::span<const double> target, double r);

/// Offspring for the population ranks after the first |M_h|: with
/// probability 1-P the parent moves relative to the nearest element of M_h
/// (probability H) or M_g (probability 1-H); otherwise it is resampled
/// uniformly over the bounds. Results are clamped and evaluated (adds
/// Np - |M_h| to eval_count, so a full iteration always costs Np).
std::vector<Individual> generate_offspring(RunState& state, const SearchBounds& bounds,
                                           const Params& params, const Objective& objective);

struct DominanceSplit {
  std::vector<Individual> kept;     // pairwise >= rho apart, non-increasing fitness
  std::vector<Individual> removed;  // dominated elements, non-increasing fitness
};

/// Greedy competition pass in descending fitness order: an element survives
/// only if it keeps distance >= rho from every stronger survivor. The best
/// element always survives.
DominanceSplit dominance_filter(std::vector<Individual> elements, double rho);

/// One memory update. Sorts the freshly evaluated population into the state,
/// replaces M_g with its top-B, then rebuilds M_h as the best B survivors of
/// the dominance filter over M_h U M_g. The historic memory holds survivors
/// only: it can dip below B after heavy competition and grows back as new
/// niches settle, which keeps the generation memory reachable for niches
/// whose peaks are lower than the current best.
const MemoryArchive& update_memories(RunState& state,
                                     std::vector<Individual> new_population, double rho);

/// Historic-memory elements above the report threshold: max/6 when the best
/// fitness is positive, otherwise the same fraction taken over the fitness
/// range (min + (max-min)/6). A degenerate all-equal memory is returned
/// whole.
std::vector<Individual> extract_optima(const std::vector<Individual>& historic);

/// Termination test, consulted once right after initialization and once
/// after every completed iteration. Implementations must eventually fire.
class StopPolicy {
 public:
  virtual ~StopPolicy() = default;
  virtual bool should_stop(const RunState& state) = 0;
};

class FixedIterationStop final : public StopPolicy {
 public:
  explicit FixedIterationStop(int iterations) : target_(iterations) {}
  bool should_stop(const RunState& state) override { return state.iteration >= target_; }

 private:
  int target_;
};

/// Stops once a progress measure has been flat for `window` consecutive
/// iterations, not before `warmup` iterations have elapsed, and
/// unconditionally at `hard_cap`.
class PlateauStop final : public StopPolicy {
 public:
  PlateauStop(int window, int warmup, int hard_cap,
              std::function<int(const RunState&)> progress);
  bool should_stop(const RunState& state) override;

 private:
  int window_;
  int warmup_;
  int hard_cap_;
  std::function<int(const RunState&)> progress_;
  int last_count_ = -1;
  int stable_for_ = 0;
  bool seen_any_ = false;
};

/// Full optimization: initialization followed by
/// {keep_best, generate_offspring, sort, update memories} until the policy
/// fires. Identical seed, params, bounds and objective give an identical
/// result apart from elapsed_seconds. A stop policy instance must not be
/// shared between runs.
RunResult run(const Objective& objective, const SearchBounds& bounds,
              const Params& params, StopPolicy& stop);

}  // namespace cab
