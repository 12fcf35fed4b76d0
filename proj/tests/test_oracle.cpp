#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

#include "cab/oracle.hpp"

using namespace cab;

namespace {

constexpr double kPi = std::numbers::pi;

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return std::sqrt(s);
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "cab_oracle_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("grid scan locates the five f1 peaks") {
  const auto candidates = grid_scan(FunctionId::F1, 1000);
  REQUIRE(candidates.size() == 5);
  const std::vector<double> expected = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(candidates[i][0] - expected[i]) < 1e-3);
  }
  CHECK_THROWS_AS(grid_scan(FunctionId::F1, 99), std::invalid_argument);
}

TEST_CASE("grid scan on a plateau reports every node") {
  const Objective constant{1, [](std::span<const double>) { return 3.5; }};
  const SearchBounds bounds({0.0}, {1.0});
  const auto candidates = grid_scan(constant, bounds, 100);
  CHECK(candidates.size() == 101);  // all nodes, interior included

  const Objective constant2{2, [](std::span<const double>) { return -1.0; }};
  const SearchBounds square({0.0, 0.0}, {1.0, 1.0});
  CHECK(grid_scan(constant2, square, 100).size() == 101 * 101);
}

TEST_CASE("grid scan keeps boundary maxima") {
  // f4 has ten per-axis peak coordinates, two of them on the domain edge.
  const auto candidates = grid_scan(FunctionId::F4, 700);
  CHECK(candidates.size() == 100);
  int on_edge = 0;
  for (const auto& candidate : candidates) {
    if (std::abs(candidate[0]) == 2.0 || std::abs(candidate[1]) == 2.0) ++on_edge;
  }
  CHECK(on_edge == 36);  // 10*10 grid of peaks, outer ring on the boundary
}

TEST_CASE("example surface scan finds the four bumps") {
  const auto candidates = grid_scan(FunctionId::Example, 500);
  REQUIRE(candidates.size() >= 4);
  for (const auto& center : std::vector<std::vector<double>>{{0, 0}, {0, -4}, {-4, 4}, {4, 4}}) {
    const bool hit = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const auto& c) { return euclidean(c, center) < 0.05; });
    CHECK(hit);
  }
}

TEST_CASE("refine walks to the nearest peak") {
  const auto [position, value] = refine(FunctionId::F1, {0.098}, 1e-8);
  CHECK(std::abs(position[0] - 0.1) < 1e-6);
  CHECK(std::abs(value - 1.0) < 1e-9);

  // a start on the optimum stays there
  const auto [fixed, fixed_value] = refine(FunctionId::F1, {0.1}, 1e-8);
  CHECK(fixed[0] == 0.1);
  CHECK(fixed_value == doctest::Approx(1.0).epsilon(1e-12));

  const auto [peak, peak_value] = refine(FunctionId::Example, {0.2, 0.1}, 1e-8);
  CHECK(std::abs(peak[0]) < 1e-6);
  CHECK(std::abs(peak[1]) < 1e-6);
  CHECK(peak_value == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(refine(FunctionId::F1, {0.1, 0.2}, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(refine(FunctionId::F1, {0.1}, 0.0), std::invalid_argument);
}

TEST_CASE("catalog counts match the published optima counts") {
  CHECK(build_catalog(FunctionId::F1).size() == 5);
  CHECK(build_catalog(FunctionId::F2).size() == 5);
  CHECK(build_catalog(FunctionId::F3).size() == 6);
  CHECK(build_catalog(FunctionId::F6).size() == 18);
  CHECK(build_catalog(FunctionId::Example).size() == 4);
}

TEST_CASE("f3 catalog sits on the unit circle") {
  const OptimaCatalog catalog = build_catalog(FunctionId::F3);
  REQUIRE(catalog.size() == 6);
  std::vector<bool> used(6, false);
  for (const CatalogEntry& entry : catalog.optima) {
    const double radius = std::hypot(entry.position[0], entry.position[1]);
    CHECK(std::abs(radius - 1.0) < 1e-3);
    const double angle = std::atan2(entry.position[1], entry.position[0]);
    bool matched = false;
    for (int k = -3; k < 3 && !matched; ++k) {
      const double expected = kPi / 6.0 + k * kPi / 3.0;
      if (std::abs(angle - expected) < 1e-3 && !used[(k + 6) % 6]) {
        used[(k + 6) % 6] = true;
        matched = true;
      }
    }
    CHECK(matched);
    CHECK(entry.value == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("example catalog pins the four bump tops with their heights") {
  const OptimaCatalog catalog = build_catalog(FunctionId::Example);
  REQUIRE(catalog.size() == 4);
  int twos = 0;
  int ones = 0;
  for (const CatalogEntry& entry : catalog.optima) {
    if (std::abs(entry.value - 2.0) < 1e-3) ++twos;
    if (std::abs(entry.value - 1.0) < 1e-3) ++ones;
  }
  CHECK(twos == 2);
  CHECK(ones == 2);
}

TEST_CASE("catalog entries re-evaluate to their stored value and verify locally") {
  for (FunctionId id : {FunctionId::F1, FunctionId::F3, FunctionId::F6, FunctionId::Example}) {
    const OptimaCatalog catalog = build_catalog(id);
    const Objective target = maximization_target(id);
    const SearchBounds& bounds = spec_of(id).bounds;
    for (const CatalogEntry& entry : catalog.optima) {
      CHECK(std::abs(target(entry.position) - entry.value) < 1e-9);
      // local maximum within the refinement tolerance, probed inside bounds
      for (std::size_t j = 0; j < entry.position.size(); ++j) {
        for (double direction : {-1.0, 1.0}) {
          std::vector<double> probe = entry.position;
          probe[j] += direction * catalog.refine_tolerance;
          if (probe[j] < bounds.lower(j) || probe[j] > bounds.upper(j)) continue;
          CHECK(target(probe) <= entry.value + 1e-12);
        }
      }
    }
    // deduplication spacing
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = i + 1; j < catalog.size(); ++j) {
        CHECK(euclidean(catalog.optima[i].position, catalog.optima[j].position) >=
              kCatalogSpacing);
      }
    }
  }
}

TEST_CASE("catalog is stable under grid refinement") {
  for (FunctionId id : {FunctionId::F1, FunctionId::F3, FunctionId::Example}) {
    const int base = default_grid_points(id);
    const OptimaCatalog coarse = build_catalog(id, base, 1e-8);
    const OptimaCatalog fine = build_catalog(id, 2 * base, 1e-8);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      CHECK(euclidean(coarse.optima[i].position, fine.optima[i].position) <= 1e-8);
    }
  }
}

TEST_CASE("catalog round-trips through its file format") {
  const OptimaCatalog catalog = build_catalog(FunctionId::F3);
  const auto file = temp_dir() / "f3.catalog.txt";
  save_catalog(catalog, file);
  const OptimaCatalog loaded = load_catalog(file);

  CHECK(loaded.objective_id == catalog.objective_id);
  CHECK(loaded.grid_points == catalog.grid_points);
  CHECK(loaded.resolution == catalog.resolution);
  CHECK(loaded.refine_tolerance == catalog.refine_tolerance);
  CHECK(loaded.cutoff == catalog.cutoff);
  REQUIRE(loaded.size() == catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    CHECK(loaded.optima[i].position == catalog.optima[i].position);  // bit-exact
    CHECK(loaded.optima[i].value == catalog.optima[i].value);
  }
  std::filesystem::remove(file);
}

TEST_CASE("load_or_build caches instead of rebuilding") {
  const auto dir = temp_dir() / "cache_check";
  std::filesystem::remove_all(dir);
  const OptimaCatalog built = load_or_build(FunctionId::F1, dir);
  CHECK(built.size() == 5);
  CHECK(std::filesystem::exists(catalog_path(FunctionId::F1, dir)));

  // Tamper with the cached file; a cache hit must surface the tampered value.
  OptimaCatalog tampered = built;
  tampered.optima[0].value = 123.5;
  save_catalog(tampered, catalog_path(FunctionId::F1, dir));
  const OptimaCatalog reloaded = load_or_build(FunctionId::F1, dir);
  CHECK(reloaded.optima[0].value == 123.5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("loading rejects malformed files") {
  const auto file = temp_dir() / "broken.catalog.txt";
  {
    std::ofstream out(file);
    out << "# objective nosuch\n";
  }
  CHECK_THROWS_AS(load_catalog(file), std::runtime_error);
  {
    std::ofstream out(file);
    out << "f1 0.1 1.0\n";  // rows before any objective header
  }
  CHECK_THROWS_AS(load_catalog(file), std::runtime_error);
  CHECK_THROWS_AS(load_catalog(temp_dir() / "missing.catalog.txt"), std::runtime_error);
  std::filesystem::remove(file);
}
