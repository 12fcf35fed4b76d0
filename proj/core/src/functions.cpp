#include "cab/functions.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cab {

namespace {

constexpr double kPi = std::numbers::pi;

double f1(double x) {
  const double s = std::sin(5.0 * kPi * x);
  const double s2 = s * s;
  return s2 * s2 * s2;
}

// Decreasing-envelope variant of f1: the same sixth-power sine factor under
// a Gaussian-like envelope centered on the first peak, so the five peaks
// keep their locations but fall off in height.
double f2(double x) {
  const double t = (x - 0.1) / 0.9;
  return std::exp2(-2.0 * t * t) * f1(x);
}

// Reciprocal distance to the sixth roots of -1: six unit-height peaks on the
// unit circle.
double f3(double x1, double x2) {
  const std::complex<double> z(x1, x2);
  const std::complex<double> z2 = z * z;
  const std::complex<double> z6 = z2 * z2 * z2;
  return 1.0 / (1.0 + std::abs(z6 + 1.0));
}

double f4(double x1, double x2) {
  return x1 * std::sin(4.0 * kPi * x1) - x2 * std::sin(4.0 * kPi * x2 + kPi) + 1.0;
}

// Inverted Rastrigin: global maximum 0 at the origin.
double f5(double x1, double x2) {
  return -(20.0 + x1 * x1 + x2 * x2 -
           10.0 * (std::cos(2.0 * kPi * x1) + std::cos(2.0 * kPi * x2)));
}

// Shubert-style product of cosine sums, negated; 18 tied global maxima.
double f6(double x1, double x2) {
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (int j = 1; j <= 5; ++j) {
    sum1 += std::cos((j + 1) * x1 + j);
    sum2 += std::cos((j + 1) * x2 + j);
  }
  return -(sum1 * sum2);
}

// Griewank-style bowl (minimization surface; negated by
// maximization_target).
double f7(double x1, double x2) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  return (x1 * x1 + x2 * x2) / 4000.0 - std::cos(x1 * inv_sqrt2) * std::cos(x2 * inv_sqrt2) +
         1.0;
}

// Short-period cosine lattice under a faint slow modulation; the modulation
// peaks select 100 of the lattice maxima.
double f8(double x1, double x2) {
  return (std::cos(0.5 * x1) + std::cos(0.5 * x2)) / 4000.0 +
         std::cos(10.0 * x1) * std::cos(10.0 * x2);
}

const ObjectiveSpec& spec_entry(FunctionId id) {
  static const std::vector<ObjectiveSpec> specs = [] {
    std::vector<ObjectiveSpec> all;
    all.push_back({FunctionId::F1, 1, SearchBounds({0.0}, {1.0}), 5});
    all.push_back({FunctionId::F2, 1, SearchBounds({0.0}, {1.0}), 5});
    all.push_back({FunctionId::F3, 2, SearchBounds({-2.0, -2.0}, {2.0, 2.0}), 6});
    all.push_back({FunctionId::F4, 2, SearchBounds({-2.0, -2.0}, {2.0, 2.0}), 100});
    all.push_back({FunctionId::F5, 2, SearchBounds({-10.0, -10.0}, {10.0, 10.0}), 100});
    all.push_back({FunctionId::F6, 2, SearchBounds({-10.0, -10.0}, {10.0, 10.0}), 18});
    all.push_back({FunctionId::F7, 2, SearchBounds({-100.0, -100.0}, {100.0, 100.0}), 100});
    all.push_back({FunctionId::F8, 2, SearchBounds({0.0, 0.0}, {120.0, 120.0}), 100});
    all.push_back({FunctionId::Example, 2, SearchBounds({-5.0, -5.0}, {5.0, 5.0}), 4});
    return all;
  }();
  return specs[static_cast<std::size_t>(id)];
}

}  // namespace

double example_function(double x1, double x2) {
  const double dx1m4 = x1 - 4.0;
  const double dx1p4 = x1 + 4.0;
  const double dx2m4 = x2 - 4.0;
  const double dx2p4 = x2 + 4.0;
  return std::exp(-dx1m4 * dx1m4 - dx2m4 * dx2m4) +
         std::exp(-dx1p4 * dx1p4 - dx2m4 * dx2m4) +
         2.0 * std::exp(-x1 * x1 - x2 * x2) +
         2.0 * std::exp(-x1 * x1 - dx2p4 * dx2p4);
}

double evaluate(FunctionId id, std::span<const double> x) {
  const ObjectiveSpec& spec = spec_entry(id);
  if (x.size() != spec.dimension) {
    throw std::invalid_argument(std::string(function_name(id)) + ": expected dimension " +
                                std::to_string(spec.dimension));
  }
  if (!spec.bounds.contains(x)) {
    throw std::invalid_argument(std::string(function_name(id)) +
                                ": input outside the search space");
  }
  switch (id) {
    case FunctionId::F1: return f1(x[0]);
    case FunctionId::F2: return f2(x[0]);
    case FunctionId::F3: return f3(x[0], x[1]);
    case FunctionId::F4: return f4(x[0], x[1]);
    case FunctionId::F5: return f5(x[0], x[1]);
    case FunctionId::F6: return f6(x[0], x[1]);
    case FunctionId::F7: return f7(x[0], x[1]);
    case FunctionId::F8: return f8(x[0], x[1]);
    case FunctionId::Example: return example_function(x[0], x[1]);
  }
  throw std::invalid_argument("unknown function id");
}

const ObjectiveSpec& spec_of(FunctionId id) { return spec_entry(id); }

std::string_view function_name(FunctionId id) noexcept {
  switch (id) {
    case FunctionId::F1: return "f1";
    case FunctionId::F2: return "f2";
    case FunctionId::F3: return "f3";
    case FunctionId::F4: return "f4";
    case FunctionId::F5: return "f5";
    case FunctionId::F6: return "f6";
    case FunctionId::F7: return "f7";
    case FunctionId::F8: return "f8";
    case FunctionId::Example: return "example";
  }
  return "?";
}

std::optional<FunctionId> parse_function_id(std::string_view name) noexcept {
  for (FunctionId id : kAllFunctions) {
    if (function_name(id) == name) return id;
  }
  return std::nullopt;
}

Objective maximization_target(FunctionId id) {
  const ObjectiveSpec& spec = spec_entry(id);
  if (id == FunctionId::F7) {
    return {spec.dimension,
            [](std::span<const double> x) { return -evaluate(FunctionId::F7, x); }};
  }
  return {spec.dimension, [id](std::span<const double> x) { return evaluate(id, x); }};
}

CountingObjective::CountingObjective(FunctionId id)
    : id_(id), target_(maximization_target(id)) {}

double CountingObjective::operator()(std::span<const double> x) {
  ++count_;
  return target_(x);
}

const ObjectiveSpec& CountingObjective::spec() const noexcept { return spec_entry(id_); }

Objective CountingObjective::handle() {
  return {target_.dimension, [this](std::span<const double> x) { return (*this)(x); }};
}

}  // namespace cab
