#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cab/functions.hpp"
#include "cab/random.hpp"

using namespace cab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("registry dimensions, bounds and optima counts") {
  const ObjectiveSpec& f1 = spec_of(FunctionId::F1);
  CHECK(f1.dimension == 1);
  CHECK(f1.bounds.lower(0) == 0.0);
  CHECK(f1.bounds.upper(0) == 1.0);
  CHECK(f1.declared_optima_count == 5);

  const ObjectiveSpec& f4 = spec_of(FunctionId::F4);
  CHECK(f4.dimension == 2);
  CHECK(f4.bounds.lower(0) == -2.0);
  CHECK(f4.bounds.upper(1) == 2.0);
  CHECK(f4.declared_optima_count == 100);

  const ObjectiveSpec& f8 = spec_of(FunctionId::F8);
  CHECK(f8.bounds.lower(0) == 0.0);
  CHECK(f8.bounds.upper(0) == 120.0);

  CHECK(spec_of(FunctionId::F2).declared_optima_count == 5);
  CHECK(spec_of(FunctionId::F3).declared_optima_count == 6);
  CHECK(spec_of(FunctionId::F5).declared_optima_count == 100);
  CHECK(spec_of(FunctionId::F6).declared_optima_count == 18);
  CHECK(spec_of(FunctionId::F7).declared_optima_count == 100);
  CHECK(spec_of(FunctionId::Example).declared_optima_count == 4);
}

TEST_CASE("function names round-trip") {
  for (FunctionId id : kAllFunctions) {
    const auto parsed = parse_function_id(function_name(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK_FALSE(parse_function_id("f9").has_value());
  CHECK_FALSE(parse_function_id("").has_value());
}

TEST_CASE("spot values of the one-dimensional functions") {
  CHECK(evaluate(FunctionId::F1, std::vector{0.1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(evaluate(FunctionId::F2, std::vector{0.1}) == doctest::Approx(1.0).epsilon(1e-12));
  // zeros of the sine factor
  CHECK(evaluate(FunctionId::F1, std::vector{0.2}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(evaluate(FunctionId::F1, std::vector{0.0}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("peaks of f1 and f2 sit together, f2 heights decreasing") {
  const std::vector<double> peaks = {0.1, 0.3, 0.5, 0.7, 0.9};
  double previous = 2.0;
  for (double peak : peaks) {
    CHECK(evaluate(FunctionId::F1, std::vector{peak}) == doctest::Approx(1.0).epsilon(1e-12));
    const double value = evaluate(FunctionId::F2, std::vector{peak});
    CHECK(value < previous);
    // locally dominant on the sine scale
    CHECK(value > evaluate(FunctionId::F2, std::vector{peak - 0.05}));
    CHECK(value > evaluate(FunctionId::F2, std::vector{peak + 0.05}));
    previous = value;
  }
}

TEST_CASE("f3 peaks at the sixth roots of -1 and rotation symmetry") {
  for (int k = 0; k < 6; ++k) {
    const double angle = kPi / 6.0 + k * kPi / 3.0;
    const std::vector<double> root = {std::cos(angle), std::sin(angle)};
    CHECK(evaluate(FunctionId::F3, root) == doctest::Approx(1.0).epsilon(1e-9));
  }
  // invariant under rotation by 60 degrees about the origin
  RandomSource rng(5);
  const double c = std::cos(kPi / 3.0);
  const double s = std::sin(kPi / 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-1.4, 1.4);
    const double y = rng.uniform(-1.4, 1.4);
    const std::vector<double> rotated = {c * x - s * y, s * x + c * y};
    CHECK(evaluate(FunctionId::F3, std::vector{x, y}) ==
          doctest::Approx(evaluate(FunctionId::F3, rotated)).epsilon(1e-12));
  }
}

TEST_CASE("f5 and f6 spot values against independent evaluations") {
  CHECK(evaluate(FunctionId::F5, std::vector{0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  // hand evaluation: -(20 + 1 + 4 - 10(cos(2 pi) + cos(4 pi))) = -5
  CHECK(evaluate(FunctionId::F5, std::vector{1.0, 2.0}) == doctest::Approx(-5.0).epsilon(1e-12));

  double sum = 0.0;
  for (int j = 1; j <= 5; ++j) sum += std::cos(static_cast<double>(j));
  CHECK(evaluate(FunctionId::F6, std::vector{0.0, 0.0}) ==
        doctest::Approx(-(sum * sum)).epsilon(1e-12));
}

TEST_CASE("f7 is a minimization surface negated by its maximization target") {
  CHECK(evaluate(FunctionId::F7, std::vector{0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  const Objective target = maximization_target(FunctionId::F7);
  RandomSource rng(9);
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> x = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
    CHECK(target(x) == -evaluate(FunctionId::F7, x));
  }
  // everything except f7 passes through unchanged
  const Objective f5 = maximization_target(FunctionId::F5);
  CHECK(f5(std::vector{1.0, 2.0}) == evaluate(FunctionId::F5, std::vector{1.0, 2.0}));
}

TEST_CASE("f8 ties its lattice peaks under a faint envelope") {
  const double peak = 4.0 * kPi;  // envelope maximum coincides with a lattice node
  CHECK(evaluate(FunctionId::F8, std::vector{peak, peak}) ==
        doctest::Approx(1.0005).epsilon(1e-12));
  const double neighbor = peak + kPi / 5.0;
  CHECK(evaluate(FunctionId::F8, std::vector{neighbor, peak}) <
        evaluate(FunctionId::F8, std::vector{peak, peak}));
}

TEST_CASE("example surface values and symmetry") {
  // own-term plus the cross-talk of the three remote bumps
  const double at_origin = 2.0 + 2.0 * std::exp(-16.0) + 2.0 * std::exp(-32.0);
  CHECK(example_function(0.0, 0.0) == doctest::Approx(at_origin).epsilon(1e-12));
  CHECK(example_function(0.0, -4.0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(example_function(4.0, 4.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(example_function(-4.0, 4.0) == doctest::Approx(1.0).epsilon(1e-6));

  const double far = example_function(5.0, -5.0);
  CHECK(far > 0.0);
  CHECK(far < 1e-3);

  RandomSource rng(13);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y = rng.uniform(-5.0, 5.0);
    CHECK(example_function(x, y) == doctest::Approx(example_function(-x, y)).epsilon(1e-12));
  }
  CHECK(evaluate(FunctionId::Example, std::vector{1.0, 1.0}) == example_function(1.0, 1.0));
}

TEST_CASE("evaluate validates dimension and bounds") {
  CHECK_THROWS_AS(evaluate(FunctionId::F1, std::vector{0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(FunctionId::F4, std::vector{0.1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(FunctionId::F1, std::vector{1.5}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(FunctionId::F8, std::vector{-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("evaluation is pure") {
  RandomSource rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double first = evaluate(FunctionId::F4, x);
    for (int again = 0; again < 3; ++again) {
      CHECK(evaluate(FunctionId::F4, x) == first);
    }
  }
}

TEST_CASE("counting objective increments once per call") {
  CountingObjective counting(FunctionId::F1);
  CHECK(counting.eval_count() == 0);
  const std::vector<double> x = {0.1};
  for (int i = 1; i <= 137; ++i) {
    counting(x);
    CHECK(counting.eval_count() == i);
  }
  CHECK(counting.spec().declared_optima_count == 5);

  Objective handle = counting.handle();
  CHECK(handle.dimension == 1);
  CHECK(handle(x) == doctest::Approx(1.0));
  CHECK(counting.eval_count() == 138);
}
