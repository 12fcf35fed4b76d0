// Command-line experiment runner: seeded multi-run batches of the optimizer
// against the benchmark suite, ground-truth catalog maintenance, and a small
// demo of the four-peak surface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cab/algorithm.hpp"
#include "cab/experiment.hpp"
#include "cab/functions.hpp"
#include "cab/metrics.hpp"
#include "cab/oracle.hpp"

namespace {

struct RunOptions {
  std::string function = "f1";
  int np = 200;
  int b = 100;
  double h_prob = 0.6;
  double p_prob = 0.8;
  double rho = 0.0;
  double perturb = 0.01;
  int iterations = 0;
  std::string plateau;
  int runs = 50;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::string catalog_dir = "catalogs";
  std::string preset;
  std::string config_file;
};

const std::set<std::string> kConfigKeys = {
    "function", "np",   "b",    "h-prob", "p-prob",      "rho",    "perturb",
    "iterations", "plateau", "runs", "seed",   "out",         "format", "catalog-dir",
    "preset"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Flat key=value file mirroring the CLI flags; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read config file: " + path);
  }
  std::map<std::string, std::string> values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config file line " + std::to_string(line_number) +
                                  " is not key=value: " + stripped);
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (!kConfigKeys.count(key)) {
      throw std::invalid_argument("config file: unknown key '" + key + "'");
    }
    values[key] = trim(stripped.substr(eq + 1));
  }
  return values;
}

cab::StoppingSpec parse_plateau(const std::string& text) {
  int window = 0;
  int warmup = 0;
  int cap = 0;
  char extra = '\0';
  if (std::sscanf(text.c_str(), "%d,%d,%d%c", &window, &warmup, &cap, &extra) != 3) {
    throw std::invalid_argument("--plateau expects WINDOW,WARMUP,CAP (got '" + text + "')");
  }
  return cab::StoppingSpec::plateau(window, warmup, cap);
}

void apply_preset(const std::string& name, RunOptions& options,
                  const std::set<std::string>& pinned) {
  RunOptions preset;
  if (name == "paper-smooth") {
    preset.np = 200;
    preset.b = 100;
    preset.p_prob = 0.8;
    preset.h_prob = 0.6;
    preset.plateau = "10,100,10000";
  } else if (name == "paper-rough") {
    preset.np = 1000;
    preset.b = 100;
    preset.p_prob = 0.8;
    preset.h_prob = 0.6;
    preset.plateau = "50,500,20000";
  } else {
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected paper-smooth or paper-rough)");
  }
  if (!pinned.count("np")) options.np = preset.np;
  if (!pinned.count("b")) options.b = preset.b;
  if (!pinned.count("p-prob")) options.p_prob = preset.p_prob;
  if (!pinned.count("h-prob")) options.h_prob = preset.h_prob;
  if (!pinned.count("plateau") && !pinned.count("iterations")) options.plateau = preset.plateau;
}

int do_run(const RunOptions& options, bool rho_set, bool iterations_set, bool plateau_set) {
  const auto id = cab::parse_function_id(options.function);
  if (!id) {
    throw std::invalid_argument("unknown function '" + options.function +
                                "' (expected f1..f8 or example)");
  }

  cab::ExperimentConfig config;
  config.objective_id = *id;
  config.cab.population_size = options.np;
  config.cab.memory_size = options.b;
  config.cab.history_prob = options.h_prob;
  config.cab.random_prob = options.p_prob;
  config.cab.perturb_fraction = options.perturb;
  if (rho_set) config.cab.rho_override = options.rho;
  config.runs = options.runs;
  config.base_seed = options.seed;
  config.output_path = options.out;
  config.catalog_dir = options.catalog_dir;

  if (iterations_set && plateau_set) {
    throw std::invalid_argument("--iterations and --plateau are mutually exclusive");
  }
  if (iterations_set) {
    config.cab.iterations = options.iterations;
    config.stopping = cab::StoppingSpec::fixed(options.iterations);
  } else if (!options.plateau.empty()) {
    config.stopping = parse_plateau(options.plateau);
  } else {
    config.stopping = cab::StoppingSpec::plateau(10, 100, 10000);
  }

  if (options.format == "csv") {
    config.format = cab::ExperimentConfig::Format::Csv;
  } else if (options.format == "json") {
    config.format = cab::ExperimentConfig::Format::Json;
  } else {
    throw std::invalid_argument("unknown format '" + options.format + "' (csv or json)");
  }

  const cab::ExperimentResult result = cab::run_experiment(config);

  const cab::AggregateStats& stats = result.stats;
  std::printf("%s: %zu cataloged optima, %d runs\n", options.function.c_str(),
              result.catalog_size, options.runs);
  std::printf("  NO  %.4f (%.4f)\n", stats.optima_found.mean, stats.optima_found.stddev);
  if (stats.mean_distance) {
    std::printf("  DO  %.3e (%.3e)\n", stats.mean_distance->mean, stats.mean_distance->stddev);
  } else {
    std::printf("  DO  n/a (no optimum found)\n");
  }
  std::printf("  FE  %.1f (%.1f)\n", stats.evaluations.mean, stats.evaluations.stddev);
  std::printf("  ET  %.4f s (%.4f)\n", stats.elapsed_seconds.mean,
              stats.elapsed_seconds.stddev);
  std::printf("  success rate %.2f\n", stats.success_rate);
  double union_sum = 0.0;
  for (const cab::RunRecord& record : result.records) union_sum += record.optima_found_union;
  std::printf("  NO (memory + final population) %.4f\n",
              union_sum / static_cast<double>(result.records.size()));
  if (!options.out.empty()) {
    std::printf("  wrote %s\n", options.out.c_str());
  }
  return 0;
}

int do_oracle(const std::string& function, int points, const std::string& catalog_dir) {
  std::vector<cab::FunctionId> ids;
  if (function == "all") {
    ids.assign(cab::kAllFunctions.begin(), cab::kAllFunctions.end());
  } else {
    const auto id = cab::parse_function_id(function);
    if (!id) {
      throw std::invalid_argument("unknown function '" + function +
                                  "' (expected f1..f8, example, or all)");
    }
    ids.push_back(*id);
  }
  std::filesystem::create_directories(catalog_dir);
  for (const cab::FunctionId id : ids) {
    const cab::OptimaCatalog catalog =
        points > 0 ? cab::build_catalog(id, points, 1e-8) : cab::build_catalog(id);
    const auto file = cab::catalog_path(id, catalog_dir);
    cab::save_catalog(catalog, file);
    std::printf("%s: %zu optima (cutoff %.9g) -> %s\n",
                std::string(cab::function_name(id)).c_str(), catalog.size(), catalog.cutoff,
                file.string().c_str());
  }
  return 0;
}

// Fixed-parameter walkthrough on the four-peak surface; prints the historic
// memory it converges to.
int do_demo(std::uint64_t seed) {
  cab::Params params;
  params.population_size = 10;
  params.memory_size = 4;
  params.history_prob = 0.8;
  params.random_prob = 0.1;
  params.rho_override = 3.0;
  params.iterations = 30;
  params.seed = seed;

  const cab::ObjectiveSpec& spec = cab::spec_of(cab::FunctionId::Example);
  const cab::Objective objective = cab::maximization_target(cab::FunctionId::Example);
  cab::FixedIterationStop stop(params.iterations);
  const cab::RunResult result = cab::run(objective, spec.bounds, params, stop);

  std::printf("four-peak surface, Np=10 B=4 H=0.8 P=0.1 rho=3, %d iterations, seed %llu\n",
              params.iterations, static_cast<unsigned long long>(seed));
  std::printf("historic memory (%zu elements):\n", result.final_historic.size());
  for (std::size_t i = 0; i < result.final_historic.size(); ++i) {
    const cab::Individual& element = result.final_historic[i];
    std::printf("  %zu: (% .6f, % .6f)  fitness %.6f\n", i + 1, element.position[0],
                element.position[1], element.fitness);
  }
  std::printf("evaluations: %lld\n", result.eval_count);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multimodal benchmark harness for the dual-memory dominance optimizer"};
  app.require_subcommand(1);

  RunOptions options;
  CLI::App* run_cmd = app.add_subcommand("run", "execute a seeded batch of runs");
  run_cmd->add_option("--function", options.function, "objective: f1..f8 or example");
  auto* np_opt = run_cmd->add_option("--np", options.np, "population size");
  auto* b_opt = run_cmd->add_option("--b", options.b, "memory size");
  auto* h_opt = run_cmd->add_option("--h-prob", options.h_prob, "historic-memory move probability");
  auto* p_opt = run_cmd->add_option("--p-prob", options.p_prob, "random-move probability");
  auto* rho_opt = run_cmd->add_option("--rho", options.rho, "dominance radius override");
  run_cmd->add_option("--perturb", options.perturb, "keep-best perturbation fraction");
  auto* iter_opt = run_cmd->add_option("--iterations", options.iterations,
                                       "fixed iteration count (excludes --plateau)");
  auto* plateau_opt = run_cmd->add_option(
      "--plateau", options.plateau, "plateau stopping WINDOW,WARMUP,CAP (excludes --iterations)");
  run_cmd->add_option("--runs", options.runs, "independent runs (seeds seed..seed+runs-1)");
  run_cmd->add_option("--seed", options.seed, "base seed");
  run_cmd->add_option("--out", options.out, "output file path");
  run_cmd->add_option("--format", options.format, "output format: csv or json");
  run_cmd->add_option("--catalog-dir", options.catalog_dir, "optima catalog directory");
  auto* preset_opt =
      run_cmd->add_option("--preset", options.preset, "paper-smooth or paper-rough");
  run_cmd->add_option("--config", options.config_file,
                      "flat key=value file mirroring these flags (flags win)");

  std::string oracle_function = "all";
  int oracle_points = 0;
  std::string oracle_dir = "catalogs";
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "build or refresh ground-truth catalogs");
  oracle_cmd->add_option("--function", oracle_function, "f1..f8, example, or all");
  oracle_cmd->add_option("--points", oracle_points, "grid cells per axis (0 = per-function default)");
  oracle_cmd->add_option("--catalog-dir", oracle_dir, "catalog directory");

  std::uint64_t demo_seed = 7;
  CLI::App* demo_cmd = app.add_subcommand("demo", "run the four-peak walkthrough");
  demo_cmd->add_option("--seed", demo_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      std::set<std::string> pinned;  // flags given on the command line
      if (np_opt->count()) pinned.insert("np");
      if (b_opt->count()) pinned.insert("b");
      if (h_opt->count()) pinned.insert("h-prob");
      if (p_opt->count()) pinned.insert("p-prob");
      if (iter_opt->count()) pinned.insert("iterations");
      if (plateau_opt->count()) pinned.insert("plateau");

      std::map<std::string, std::string> file_values;
      if (!options.config_file.empty()) {
        file_values = read_config_file(options.config_file);
      }
      const auto file_value = [&](const char* key) -> const std::string* {
        const auto it = file_values.find(key);
        return it == file_values.end() ? nullptr : &it->second;
      };

      // Precedence: defaults, then preset, then config file, then flags.
      for (const auto& [key, value] : file_values) pinned.insert(key);
      std::string preset_name = options.preset;
      if (!preset_opt->count()) {
        if (const auto* v = file_value("preset")) preset_name = *v;
      }
      if (!preset_name.empty()) apply_preset(preset_name, options, pinned);

      bool rho_set = rho_opt->count() > 0;
      bool iterations_set = iter_opt->count() > 0;
      bool plateau_set = plateau_opt->count() > 0;
      if (!run_cmd->count("--function")) {
        if (const auto* v = file_value("function")) options.function = *v;
      }
      if (!np_opt->count()) {
        if (const auto* v = file_value("np")) options.np = std::stoi(*v);
      }
      if (!b_opt->count()) {
        if (const auto* v = file_value("b")) options.b = std::stoi(*v);
      }
      if (!h_opt->count()) {
        if (const auto* v = file_value("h-prob")) options.h_prob = std::stod(*v);
      }
      if (!p_opt->count()) {
        if (const auto* v = file_value("p-prob")) options.p_prob = std::stod(*v);
      }
      if (!rho_set) {
        if (const auto* v = file_value("rho")) {
          options.rho = std::stod(*v);
          rho_set = true;
        }
      }
      if (!run_cmd->count("--perturb")) {
        if (const auto* v = file_value("perturb")) options.perturb = std::stod(*v);
      }
      if (!iterations_set) {
        if (const auto* v = file_value("iterations")) {
          options.iterations = std::stoi(*v);
          iterations_set = true;
        }
      }
      if (!plateau_set) {
        if (const auto* v = file_value("plateau")) {
          options.plateau = *v;
          plateau_set = true;
        }
      }
      if (!run_cmd->count("--runs")) {
        if (const auto* v = file_value("runs")) options.runs = std::stoi(*v);
      }
      if (!run_cmd->count("--seed")) {
        if (const auto* v = file_value("seed")) options.seed = std::stoull(*v);
      }
      if (!run_cmd->count("--out")) {
        if (const auto* v = file_value("out")) options.out = *v;
      }
      if (!run_cmd->count("--format")) {
        if (const auto* v = file_value("format")) options.format = *v;
      }
      if (!run_cmd->count("--catalog-dir")) {
        if (const auto* v = file_value("catalog-dir")) options.catalog_dir = *v;
      }

      return do_run(options, rho_set, iterations_set, plateau_set);
    }
    if (oracle_cmd->parsed()) {
      return do_oracle(oracle_function, oracle_points, oracle_dir);
    }
    if (demo_cmd->parsed()) {
      return do_demo(demo_seed);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
