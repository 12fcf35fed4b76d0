#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "cab/functions.hpp"

namespace cab {

/// Ground-truth optimum of a benchmark, located independently of the
/// optimizer under test.
struct CatalogEntry {
  std::vector<double> position;
  double value = 0.0;
};

/// Catalog of the true optima of one benchmark. Entries are pairwise at
/// least 0.01 apart (twice the found-criterion radius) and sorted by
/// position for a deterministic order.
struct OptimaCatalog {
  FunctionId objective_id = FunctionId::F1;
  std::vector<CatalogEntry> optima;
  int grid_points = 0;          // cells per axis used by the scan
  double resolution = 0.0;      // grid step
  double refine_tolerance = 0.0;
  double cutoff = 0.0;          // significance cutoff actually applied

  std::size_t size() const noexcept { return optima.size(); }
};

/// Minimum spacing between catalog entries.
inline constexpr double kCatalogSpacing = 0.01;

/// Evaluates the maximization target on a regular grid with points_per_dim
/// cells per axis (nodes at cell boundaries, bounds included) and returns
/// every node whose value is >= all existing neighbors (8-neighborhood in
/// 2D, both sides in 1D). points_per_dim must be at least 100. On a plateau
/// every node qualifies.
std::vector<std::vector<double>> grid_scan(FunctionId id, int points_per_dim);
std::vector<std::vector<double>> grid_scan(const Objective& target, const SearchBounds& bounds,
                                           int points_per_dim);

/// Derivative-free local ascent from start: coordinate-wise pattern search
/// with a shrinking step, never leaving the bounds. Returns the refined
/// position and its value. The optimizer under test shares no code with
/// this path.
std::pair<std::vector<double>, double> refine(FunctionId id, std::vector<double> start,
                                              double tolerance);

/// Default scan density per function: 2000 cells for the 1D functions,
/// 700 per axis in 2D, raised to 2400 for f8 so its short peak period is
/// well resolved.
int default_grid_points(FunctionId id);

/// Full pipeline: scan, refine every candidate, deduplicate within 0.01 and
/// apply the significance cutoff (see the catalog format notes). Throws
/// std::runtime_error if the catalog size differs from the declared optima
/// count for f1, f2, f3, f6 or the example surface, which signals a formula
/// transcription bug.
OptimaCatalog build_catalog(FunctionId id);
OptimaCatalog build_catalog(FunctionId id, int points_per_dim, double refine_tolerance);

/// Plain-text tabular persistence: '#'-prefixed metadata lines followed by
/// one "<objective> <x1> .. <xD> <value>" row per optimum, full double
/// precision. Throws std::runtime_error on I/O or parse failure.
void save_catalog(const OptimaCatalog& catalog, const std::filesystem::path& file);
OptimaCatalog load_catalog(const std::filesystem::path& file);

/// Canonical file name within a catalog directory: "<name>.catalog.txt".
std::filesystem::path catalog_path(FunctionId id, const std::filesystem::path& dir);

/// Returns the cached catalog if present, otherwise builds and persists it.
OptimaCatalog load_or_build(FunctionId id, const std::filesystem::path& dir);

}  // namespace cab
