#include "cab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace cab {

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string format_tuple(const std::vector<double>& position) {
  std::string out = "(";
  for (std::size_t j = 0; j < position.size(); ++j) {
    if (j > 0) out += ',';
    out += format_double(position[j]);
  }
  out += ')';
  return out;
}

std::string format_positions(const std::vector<std::vector<double>>& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ';';
    out += format_tuple(positions[i]);
  }
  return out;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::unique_ptr<StopPolicy> make_stop_policy(const StoppingSpec& spec,
                                             const OptimaCatalog& catalog) {
  if (spec.kind == StoppingSpec::Kind::Fixed) {
    return std::make_unique<FixedIterationStop>(spec.iterations);
  }
  return std::make_unique<PlateauStop>(
      spec.window, spec.warmup, spec.hard_cap, [&catalog](const RunState& state) {
        return count_found(state.archive.historic_best, catalog);
      });
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

}  // namespace

StoppingSpec StoppingSpec::fixed(int iterations) {
  StoppingSpec spec;
  spec.kind = Kind::Fixed;
  spec.iterations = iterations;
  return spec;
}

StoppingSpec StoppingSpec::plateau(int window, int warmup, int hard_cap) {
  StoppingSpec spec;
  spec.kind = Kind::Plateau;
  spec.window = window;
  spec.warmup = warmup;
  spec.hard_cap = hard_cap;
  return spec;
}

void StoppingSpec::validate() const {
  if (kind == Kind::Fixed) {
    if (iterations < 0) throw std::invalid_argument("stopping: iterations must be non-negative");
    return;
  }
  if (window < 1) throw std::invalid_argument("stopping: plateau window must be at least 1");
  if (warmup < 0) throw std::invalid_argument("stopping: plateau warmup must be non-negative");
  if (hard_cap <= warmup) {
    throw std::invalid_argument("stopping: plateau hard_cap must exceed warmup");
  }
}

void ExperimentConfig::validate() const {
  cab.validate();
  stopping.validate();
  if (runs < 1) throw std::invalid_argument("experiment: runs must be positive");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const ObjectiveSpec& spec = spec_of(config.objective_id);
  const OptimaCatalog catalog = load_or_build(config.objective_id, config.catalog_dir);
  const Objective objective = maximization_target(config.objective_id);

  ExperimentResult result;
  result.objective_id = config.objective_id;
  result.catalog_size = catalog.size();
  result.records.reserve(config.runs);

  for (int i = 0; i < config.runs; ++i) {
    Params params = config.cab;
    params.seed = config.base_seed + static_cast<std::uint64_t>(i);
    const auto stop = make_stop_policy(config.stopping, catalog);
    const RunResult run_result = run(objective, spec.bounds, params, *stop);

    RunRecord record;
    record.run_index = i;
    record.seed = params.seed;
    record.iterations = run_result.iterations;
    record.metrics.optima_found = count_found(run_result.final_historic, catalog);
    record.metrics.mean_distance = mean_distance(run_result.final_historic, catalog);
    record.metrics.evaluations = run_result.eval_count;
    record.metrics.elapsed_seconds = run_result.elapsed_seconds;

    std::vector<Individual> combined = run_result.final_historic;
    combined.insert(combined.end(), run_result.final_population.begin(),
                    run_result.final_population.end());
    record.optima_found_union = count_found(combined, catalog);

    for (const CatalogEntry& optimum : catalog.optima) {
      const Individual* closest = nullptr;
      double best = std::numeric_limits<double>::infinity();
      for (const Individual& individual : run_result.final_historic) {
        const double d = distance(optimum.position, individual.position);
        if (d < best) {
          best = d;
          closest = &individual;
        }
      }
      if (closest != nullptr && best < kFoundRadius) {
        record.matched_positions.push_back(closest->position);
      }
    }
    result.records.push_back(std::move(record));
  }

  if (config.runs >= 2) {
    std::vector<RunMetrics> metrics;
    metrics.reserve(result.records.size());
    for (const RunRecord& record : result.records) metrics.push_back(record.metrics);
    result.stats = aggregate(metrics, catalog.size());
  } else {
    // A single run aggregates to itself; the sample deviation is undefined
    // and reported as zero.
    const RunMetrics& only = result.records.front().metrics;
    result.stats.optima_found = {static_cast<double>(only.optima_found), 0.0};
    if (only.mean_distance) result.stats.mean_distance = Aggregate{*only.mean_distance, 0.0};
    result.stats.evaluations = {static_cast<double>(only.evaluations), 0.0};
    result.stats.elapsed_seconds = {only.elapsed_seconds, 0.0};
    result.stats.success_rate =
        only.optima_found == static_cast<int>(catalog.size()) ? 1.0 : 0.0;
  }

  if (!config.output_path.empty()) {
    emit_results(result, config.format, config.output_path);
  }
  return result;
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "objective,run_index,seed,NO,DO,FE,ET_seconds,iterations,optima_positions\n";
  const std::string_view name = function_name(result.objective_id);
  for (const RunRecord& record : result.records) {
    out << name << ',' << record.run_index << ',' << record.seed << ','
        << record.metrics.optima_found << ',';
    if (record.metrics.mean_distance) out << format_double(*record.metrics.mean_distance);
    out << ',' << record.metrics.evaluations << ','
        << format_double(record.metrics.elapsed_seconds) << ',' << record.iterations << ",\""
        << format_positions(record.matched_positions) << "\"\n";
  }

  std::vector<double> iterations;
  for (const RunRecord& record : result.records) {
    iterations.push_back(static_cast<double>(record.iterations));
  }
  const AggregateStats& stats = result.stats;
  out << name << ",aggregate,," << format_double(stats.optima_found.mean) << ',';
  if (stats.mean_distance) out << format_double(stats.mean_distance->mean);
  out << ',' << format_double(stats.evaluations.mean) << ','
      << format_double(stats.elapsed_seconds.mean) << ',' << format_double(mean_of(iterations))
      << ",\"\"\n";
}

void write_json(const ExperimentResult& result, std::ostream& out) {
  nlohmann::json doc;
  doc["objective"] = function_name(result.objective_id);
  doc["catalog_size"] = result.catalog_size;

  nlohmann::json runs = nlohmann::json::array();
  for (const RunRecord& record : result.records) {
    nlohmann::json row;
    row["objective"] = function_name(result.objective_id);
    row["run_index"] = record.run_index;
    row["seed"] = record.seed;
    row["NO"] = record.metrics.optima_found;
    if (record.metrics.mean_distance) {
      row["DO"] = *record.metrics.mean_distance;
    } else {
      row["DO"] = nullptr;
    }
    row["FE"] = record.metrics.evaluations;
    row["ET_seconds"] = record.metrics.elapsed_seconds;
    row["iterations"] = record.iterations;
    row["optima_positions"] = record.matched_positions;
    row["NO_union"] = record.optima_found_union;
    runs.push_back(std::move(row));
  }
  doc["runs"] = std::move(runs);

  const AggregateStats& stats = result.stats;
  nlohmann::json aggregate;
  aggregate["run_index"] = "aggregate";
  aggregate["NO"] = {{"mean", stats.optima_found.mean}, {"std", stats.optima_found.stddev}};
  if (stats.mean_distance) {
    aggregate["DO"] = {{"mean", stats.mean_distance->mean}, {"std", stats.mean_distance->stddev}};
  } else {
    aggregate["DO"] = nullptr;
  }
  aggregate["FE"] = {{"mean", stats.evaluations.mean}, {"std", stats.evaluations.stddev}};
  aggregate["ET_seconds"] = {{"mean", stats.elapsed_seconds.mean},
                             {"std", stats.elapsed_seconds.stddev}};
  aggregate["success_rate"] = stats.success_rate;
  doc["aggregate"] = std::move(aggregate);

  out << doc.dump(2) << '\n';
}

void emit_results(const ExperimentResult& result, ExperimentConfig::Format format,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("experiment: cannot write output file " + path);
  }
  if (format == ExperimentConfig::Format::Csv) {
    write_csv(result, out);
  } else {
    write_json(result, out);
  }
  if (!out.flush()) {
    throw std::runtime_error("experiment: failed writing output file " + path);
  }
}

}  // namespace cab
