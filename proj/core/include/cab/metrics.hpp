#pragma once

#include <optional>
#include <span>

#include "cab/oracle.hpp"
#include "cab/types.hpp"

namespace cab {

/// An optimum counts as found when some individual lies strictly within
/// this Euclidean distance of it.
inline constexpr double kFoundRadius = 0.005;

/// The four performance measures of one run.
struct RunMetrics {
  int optima_found = 0;                       // NO
  std::optional<double> mean_distance;        // DO; absent when nothing was found
  long long evaluations = 0;                  // FE
  double elapsed_seconds = 0.0;               // ET
};

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (R-1 divisor)
};

/// Mean and sample standard deviation per measure over R runs, plus the
/// fraction of runs that found every cataloged optimum.
struct AggregateStats {
  Aggregate optima_found;
  std::optional<Aggregate> mean_distance;  // over runs where DO exists
  Aggregate evaluations;
  Aggregate elapsed_seconds;
  double success_rate = 0.0;
};

/// Number of catalog optima with at least one individual within
/// kFoundRadius; each optimum counts at most once.
int count_found(std::span<const Individual> population, const OptimaCatalog& catalog);

/// Average distance from each found optimum to its closest individual.
/// Absent (not zero) when no optimum was found.
std::optional<double> mean_distance(std::span<const Individual> population,
                                    const OptimaCatalog& catalog);

/// Aggregates at least two runs; throws std::invalid_argument otherwise.
/// catalog_size defines full success for the success rate.
AggregateStats aggregate(std::span<const RunMetrics> runs, std::size_t catalog_size);

}  // namespace cab
