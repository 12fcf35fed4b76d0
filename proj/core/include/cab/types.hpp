#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace cab {

/// Axis-aligned box constraints for a D-dimensional search space.
/// Invariant: lower and upper have the same length D >= 1 and
/// lower[j] < upper[j] for every axis.
class SearchBounds {
 public:
  /// Throws std::invalid_argument if the invariant does not hold.
  SearchBounds(std::vector<double> lower, std::vector<double> upper);

  std::size_t dimension() const noexcept { return lower_.size(); }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }
  double width(std::size_t j) const { return upper_[j] - lower_[j]; }
  const std::vector<double>& lower_limits() const noexcept { return lower_; }
  const std::vector<double>& upper_limits() const noexcept { return upper_; }

  bool contains(std::span<const double> x) const noexcept;
  void clamp(std::span<double> x) const noexcept;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Tuning knobs of the optimizer.
struct Params {
  int population_size = 200;  // Np
  int memory_size = 100;      // B, elements held by each memory
  double history_prob = 0.6;  // H, chance a move targets the historic memory
  double random_prob = 0.8;   // P, chance an offspring is resampled uniformly
  int iterations = 100;       // NI, for fixed-iteration stopping

  // Minimum spacing enforced between memory elements; when absent the
  // default derives from the bounds (see dominance_radius).
  std::optional<double> rho_override;

  // Per-axis scale of the keep-best perturbation, as a fraction of the
  // axis width.
  double perturb_fraction = 0.01;

  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

/// A candidate solution with its cached objective value (maximization
/// sense). Memory elements are never re-evaluated; fitness travels with
/// the position.
struct Individual {
  std::vector<double> position;
  double fitness = 0.0;
};

/// The paired memories: per-generation best (M_g) and historic best (M_h),
/// each holding exactly B elements, non-increasing by fitness.
struct MemoryArchive {
  std::vector<Individual> generation_best;
  std::vector<Individual> historic_best;
};

/// A maximization objective over a fixed input dimension. The callable must
/// be pure and reentrant; minimization problems wrap their function with a
/// negation.
struct Objective {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> fn;

  double operator()(std::span<const double> x) const { return fn(x); }
};

struct RunResult {
  std::vector<Individual> final_historic;    // M_h at termination
  std::vector<Individual> final_population;  // last population, fitness-sorted
  std::vector<Individual> optima;            // historic elements above the report threshold
  long long eval_count = 0;
  int iterations = 0;
  double elapsed_seconds = 0.0;
};

}  // namespace cab
