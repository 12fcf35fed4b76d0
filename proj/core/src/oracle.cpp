#include "cab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
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

// Value ties at the significance cutoff are honored within this slack.
double tie_slack(double value) { return 1e-8 * std::max(1.0, std::abs(value)); }

bool rank_limited(FunctionId id) {
  switch (id) {
    case FunctionId::F4:
    case FunctionId::F5:
    case FunctionId::F6:
    case FunctionId::F7:
    case FunctionId::F8:
      return true;
    default:
      return false;
  }
}

bool exact_count_required(FunctionId id) {
  switch (id) {
    case FunctionId::F1:
    case FunctionId::F2:
    case FunctionId::F3:
    case FunctionId::F6:
    case FunctionId::Example:
      return true;
    default:
      return false;
  }
}

// Coordinate-wise pattern search with strict-improvement moves and a
// halving step, clamped to the bounds.
std::pair<std::vector<double>, double> pattern_search(const Objective& target,
                                                      const SearchBounds& bounds,
                                                      std::vector<double> x,
                                                      std::vector<double> step,
                                                      double tolerance) {
  bounds.clamp(x);
  double value = target(x);
  while (*std::max_element(step.begin(), step.end()) >= tolerance) {
    bool improved = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (const double direction : {+1.0, -1.0}) {
        const double original = x[j];
        x[j] = std::clamp(original + direction * step[j], bounds.lower(j), bounds.upper(j));
        const double candidate = target(x);
        if (candidate > value) {
          value = candidate;
          improved = true;
          break;  // keep the move, next axis
        }
        x[j] = original;
      }
    }
    if (!improved) {
      for (double& s : step) s *= 0.5;
    }
  }
  return {std::move(x), value};
}

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace

int default_grid_points(FunctionId id) {
  const ObjectiveSpec& spec = spec_of(id);
  if (spec.dimension == 1) return 2000;
  // f8 packs a maximum roughly every 0.63 units across [0,120]; 2400 cells
  // give it several nodes per period.
  if (id == FunctionId::F8) return 2400;
  return 700;
}

std::vector<std::vector<double>> grid_scan(const Objective& target, const SearchBounds& bounds,
                                           int points_per_dim) {
  if (points_per_dim < 100) {
    throw std::invalid_argument("grid_scan: points_per_dim must be at least 100");
  }
  if (target.dimension != bounds.dimension()) {
    throw std::invalid_argument("grid_scan: objective dimension does not match the bounds");
  }
  const int n = points_per_dim + 1;  // nodes, both bounds included
  const auto node = [&](std::size_t axis, int k) {
    return bounds.lower(axis) + bounds.width(axis) * k / points_per_dim;
  };

  std::vector<std::vector<double>> candidates;
  if (bounds.dimension() == 1) {
    std::vector<double> values(n);
    std::vector<double> x(1);
    for (int i = 0; i < n; ++i) {
      x[0] = node(0, i);
      values[i] = target(x);
    }
    for (int i = 0; i < n; ++i) {
      if (i > 0 && values[i] < values[i - 1]) continue;
      if (i + 1 < n && values[i] < values[i + 1]) continue;
      candidates.push_back({node(0, i)});
    }
    return candidates;
  }

  // Three value rows in flight keep memory linear in the grid width.
  std::vector<double> rows[3];
  std::vector<double> point(2);
  const auto fill_row = [&](std::vector<double>& row, int i) {
    row.resize(n);
    point[0] = node(0, i);
    for (int j = 0; j < n; ++j) {
      point[1] = node(1, j);
      row[j] = target(point);
    }
  };
  fill_row(rows[1], 0);  // rows[0] empty: no row above the first one
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) {
      fill_row(rows[2], i + 1);
    } else {
      rows[2].clear();
    }
    const std::vector<double>& cur = rows[1];
    for (int j = 0; j < n; ++j) {
      bool is_peak = true;
      for (const std::vector<double>* row : {&rows[0], &rows[1], &rows[2]}) {
        if (row->empty()) continue;
        for (int dj = -1; dj <= 1 && is_peak; ++dj) {
          const int nj = j + dj;
          if (nj < 0 || nj >= n) continue;
          if (row == &rows[1] && dj == 0) continue;
          if (cur[j] < (*row)[nj]) is_peak = false;
        }
        if (!is_peak) break;
      }
      if (is_peak) candidates.push_back({node(0, i), node(1, j)});
    }
    rows[0] = std::move(rows[1]);
    rows[1] = std::move(rows[2]);
    rows[2].clear();
  }
  return candidates;
}

std::vector<std::vector<double>> grid_scan(FunctionId id, int points_per_dim) {
  return grid_scan(maximization_target(id), spec_of(id).bounds, points_per_dim);
}

std::pair<std::vector<double>, double> refine(FunctionId id, std::vector<double> start,
                                              double tolerance) {
  const ObjectiveSpec& spec = spec_of(id);
  if (start.size() != spec.dimension) {
    throw std::invalid_argument("refine: start has the wrong dimension");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("refine: tolerance must be positive");
  }
  std::vector<double> step(spec.dimension);
  for (std::size_t j = 0; j < step.size(); ++j) {
    step[j] = spec.bounds.width(j) / 100.0;
  }
  return pattern_search(maximization_target(id), spec.bounds, std::move(start),
                        std::move(step), tolerance);
}

OptimaCatalog build_catalog(FunctionId id) {
  return build_catalog(id, default_grid_points(id), 1e-8);
}

OptimaCatalog build_catalog(FunctionId id, int points_per_dim, double refine_tolerance) {
  const ObjectiveSpec& spec = spec_of(id);
  const Objective target = maximization_target(id);

  std::vector<std::vector<double>> starts = grid_scan(id, points_per_dim);

  std::vector<double> step(spec.dimension);
  for (std::size_t j = 0; j < step.size(); ++j) {
    step[j] = spec.bounds.width(j) / points_per_dim;
  }
  // Refining past the requested tolerance keeps positions stable across
  // scan resolutions to within that tolerance.
  const double inner_tolerance = refine_tolerance / 4.0;

  std::vector<CatalogEntry> refined;
  refined.reserve(starts.size());
  for (std::vector<double>& start : starts) {
    auto [position, value] =
        pattern_search(target, spec.bounds, std::move(start), step, inner_tolerance);
    refined.push_back({std::move(position), value});
  }
  std::sort(refined.begin(), refined.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.position < b.position;
  });

  const bool limited = rank_limited(id);
  const int declared = spec.declared_optima_count;
  std::vector<CatalogEntry> kept;
  double cutoff = 0.0;
  bool cutoff_known = false;
  for (CatalogEntry& candidate : refined) {
    if (limited && cutoff_known && candidate.value < cutoff - tie_slack(cutoff)) break;
    bool distinct = true;
    for (const CatalogEntry& existing : kept) {
      if (squared_distance(candidate.position, existing.position) <
          kCatalogSpacing * kCatalogSpacing) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;
    kept.push_back(std::move(candidate));
    if (limited && !cutoff_known && static_cast<int>(kept.size()) == declared) {
      cutoff = kept.back().value;
      cutoff_known = true;
    }
  }
  if (!cutoff_known && !kept.empty()) cutoff = kept.back().value;

  if (exact_count_required(id) && static_cast<int>(kept.size()) != declared) {
    throw std::runtime_error(std::string("oracle: ") + std::string(function_name(id)) +
                             " cataloged " + std::to_string(kept.size()) + " optima, expected " +
                             std::to_string(declared) +
                             " (formula transcription bug?)");
  }

  std::sort(kept.begin(), kept.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.position < b.position;
  });

  OptimaCatalog catalog;
  catalog.objective_id = id;
  catalog.optima = std::move(kept);
  catalog.grid_points = points_per_dim;
  catalog.resolution = spec.bounds.width(0) / points_per_dim;
  catalog.refine_tolerance = refine_tolerance;
  catalog.cutoff = cutoff;
  return catalog;
}

void save_catalog(const OptimaCatalog& catalog, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw std::runtime_error("oracle: cannot write catalog file " + file.string());
  }
  out << "# cabopt optima catalog\n";
  out << "# objective " << function_name(catalog.objective_id) << '\n';
  out << "# grid_points " << catalog.grid_points << '\n';
  out << "# resolution " << format_double(catalog.resolution) << '\n';
  out << "# refine_tolerance " << format_double(catalog.refine_tolerance) << '\n';
  out << "# cutoff " << format_double(catalog.cutoff) << '\n';
  out << "# columns: objective position[0..D-1] value\n";
  for (const CatalogEntry& entry : catalog.optima) {
    out << function_name(catalog.objective_id);
    for (double coordinate : entry.position) {
      out << ' ' << format_double(coordinate);
    }
    out << ' ' << format_double(entry.value) << '\n';
  }
  if (!out.flush()) {
    throw std::runtime_error("oracle: failed writing catalog file " + file.string());
  }
}

OptimaCatalog load_catalog(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("oracle: cannot read catalog file " + file.string());
  }
  OptimaCatalog catalog;
  bool saw_objective = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream meta(line.substr(1));
      std::string key;
      meta >> key;
      if (key == "objective") {
        std::string name;
        meta >> name;
        const auto id = parse_function_id(name);
        if (!id) throw std::runtime_error("oracle: unknown objective in catalog: " + name);
        catalog.objective_id = *id;
        saw_objective = true;
      } else if (key == "grid_points") {
        meta >> catalog.grid_points;
      } else if (key == "resolution") {
        meta >> catalog.resolution;
      } else if (key == "refine_tolerance") {
        meta >> catalog.refine_tolerance;
      } else if (key == "cutoff") {
        meta >> catalog.cutoff;
      }
      continue;
    }
    if (!saw_objective) {
      throw std::runtime_error("oracle: catalog rows precede the objective header");
    }
    std::istringstream row(line);
    std::string name;
    row >> name;
    const std::size_t dim = spec_of(catalog.objective_id).dimension;
    CatalogEntry entry;
    entry.position.resize(dim);
    for (double& coordinate : entry.position) row >> coordinate;
    row >> entry.value;
    if (!row) {
      throw std::runtime_error("oracle: malformed catalog row: " + line);
    }
    catalog.optima.push_back(std::move(entry));
  }
  if (!saw_objective) {
    throw std::runtime_error("oracle: catalog file has no objective header: " + file.string());
  }
  return catalog;
}

std::filesystem::path catalog_path(FunctionId id, const std::filesystem::path& dir) {
  return dir / (std::string(function_name(id)) + ".catalog.txt");
}

OptimaCatalog load_or_build(FunctionId id, const std::filesystem::path& dir) {
  const std::filesystem::path file = catalog_path(id, dir);
  if (std::filesystem::exists(file)) {
    OptimaCatalog catalog = load_catalog(file);
    if (catalog.objective_id == id && !catalog.optima.empty()) return catalog;
  }
  OptimaCatalog catalog = build_catalog(id);
  std::filesystem::create_directories(dir);
  save_catalog(catalog, file);
  return catalog;
}

}  // namespace cab
