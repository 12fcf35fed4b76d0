#include "cab/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cab {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// Distance from one catalog optimum to its closest individual.
double closest_distance(const CatalogEntry& optimum, std::span<const Individual> population) {
  double best = std::numeric_limits<double>::infinity();
  for (const Individual& individual : population) {
    best = std::min(best, distance(optimum.position, individual.position));
  }
  return best;
}

Aggregate aggregate_values(const std::vector<double>& values) {
  Aggregate out;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      const double d = v - out.mean;
      ss += d * d;
    }
    out.stddev = std::sqrt(ss / (n - 1.0));
  }
  return out;
}

}  // namespace

int count_found(std::span<const Individual> population, const OptimaCatalog& catalog) {
  int found = 0;
  for (const CatalogEntry& optimum : catalog.optima) {
    if (closest_distance(optimum, population) < kFoundRadius) ++found;
  }
  return found;
}

std::optional<double> mean_distance(std::span<const Individual> population,
                                    const OptimaCatalog& catalog) {
  double sum = 0.0;
  int found = 0;
  for (const CatalogEntry& optimum : catalog.optima) {
    const double d = closest_distance(optimum, population);
    if (d < kFoundRadius) {
      sum += d;
      ++found;
    }
  }
  if (found == 0) return std::nullopt;
  return sum / found;
}

AggregateStats aggregate(std::span<const RunMetrics> runs, std::size_t catalog_size) {
  if (runs.size() < 2) {
    throw std::invalid_argument("aggregate: at least two runs are required");
  }
  std::vector<double> no;
  std::vector<double> distances;
  std::vector<double> fe;
  std::vector<double> et;
  int full_successes = 0;
  for (const RunMetrics& run : runs) {
    no.push_back(static_cast<double>(run.optima_found));
    if (run.mean_distance) distances.push_back(*run.mean_distance);
    fe.push_back(static_cast<double>(run.evaluations));
    et.push_back(run.elapsed_seconds);
    if (run.optima_found == static_cast<int>(catalog_size)) ++full_successes;
  }

  AggregateStats stats;
  stats.optima_found = aggregate_values(no);
  if (!distances.empty()) stats.mean_distance = aggregate_values(distances);
  stats.evaluations = aggregate_values(fe);
  stats.elapsed_seconds = aggregate_values(et);
  stats.success_rate = static_cast<double>(full_successes) / static_cast<double>(runs.size());
  return stats;
}

}  // namespace cab
