#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cab/algorithm.hpp"
#include "cab/metrics.hpp"
#include "cab/oracle.hpp"

namespace cab {

/// Termination rule of an experiment run: a fixed iteration count, or a
/// plateau of the number of cataloged optima identified in the historic
/// memory (flat for `window` generations after `warmup`, hard-capped).
struct StoppingSpec {
  enum class Kind { Fixed, Plateau };

  Kind kind = Kind::Plateau;
  int iterations = 100;  // Fixed
  int window = 10;       // Plateau
  int warmup = 100;
  int hard_cap = 10000;

  static StoppingSpec fixed(int iterations);
  static StoppingSpec plateau(int window, int warmup, int hard_cap);

  void validate() const;
};

struct ExperimentConfig {
  FunctionId objective_id = FunctionId::F1;
  Params cab;  // cab.seed is ignored; run i uses base_seed + i
  int runs = 50;
  StoppingSpec stopping;
  std::uint64_t base_seed = 0;
  std::string output_path;  // empty: no file written
  enum class Format { Csv, Json };
  Format format = Format::Csv;
  std::filesystem::path catalog_dir = "catalogs";

  void validate() const;
};

struct RunRecord {
  int run_index = 0;
  std::uint64_t seed = 0;
  RunMetrics metrics;             // NO scored on the historic memory
  int optima_found_union = 0;     // NO scored on M_h plus the final population
  int iterations = 0;
  // Closest historic individual per found optimum, in catalog order.
  std::vector<std::vector<double>> matched_positions;
};

struct ExperimentResult {
  FunctionId objective_id = FunctionId::F1;
  std::size_t catalog_size = 0;
  std::vector<RunRecord> records;
  AggregateStats stats;
};

/// Executes `runs` independent seeded runs against the objective, scoring
/// each against the oracle catalog (built on demand under catalog_dir) and
/// writing the configured output file when output_path is set.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Row schema: objective, run_index, seed, NO, DO, FE, ET_seconds,
/// iterations, optima_positions (semicolon-separated coordinate tuples).
/// An absent DO is an empty CSV field / JSON null. The trailing aggregate
/// row carries per-column means and run_index "aggregate".
void write_csv(const ExperimentResult& result, std::ostream& out);
void write_json(const ExperimentResult& result, std::ostream& out);

/// Writes the records to path in the requested format; throws
/// std::runtime_error when the file cannot be written.
void emit_results(const ExperimentResult& result, ExperimentConfig::Format format,
                  const std::string& path);

}  // namespace cab
