#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "cab/types.hpp"

namespace cab {

/// The benchmark suite: f1..f8 plus the four-peak demo surface.
enum class FunctionId { F1, F2, F3, F4, F5, F6, F7, F8, Example };

inline constexpr std::array<FunctionId, 9> kAllFunctions = {
    FunctionId::F1, FunctionId::F2, FunctionId::F3,      FunctionId::F4, FunctionId::F5,
    FunctionId::F6, FunctionId::F7, FunctionId::F8,      FunctionId::Example};

struct ObjectiveSpec {
  FunctionId id;
  std::size_t dimension;
  SearchBounds bounds;
  int declared_optima_count;  // published optima count for the suite
};

/// Value of the suite formula. All functions are used in maximization sense
/// except f7, whose formula is a minimization bowl (see
/// maximization_target). Throws std::invalid_argument on a wrong dimension
/// or an out-of-bounds input; callers clamp first.
double evaluate(FunctionId id, std::span<const double> x);

/// The demo surface: sum of four Gaussian bumps with maxima of about 2 at
/// (0,0) and (0,-4) and about 1 at (-4,4) and (4,4), over [-5,5]^2.
double example_function(double x1, double x2);

const ObjectiveSpec& spec_of(FunctionId id);

std::string_view function_name(FunctionId id) noexcept;

/// Accepts "f1".."f8" and "example"; empty result for anything else.
std::optional<FunctionId> parse_function_id(std::string_view name) noexcept;

/// Maximization view of a suite function. This is the single place where
/// search sense is adapted: f7 is negated, everything else is passed
/// through.
Objective maximization_target(FunctionId id);

/// Wrapper counting evaluations of the maximization target; exactly one
/// increment per call. Owned by a single run.
class CountingObjective {
 public:
  explicit CountingObjective(FunctionId id);

  double operator()(std::span<const double> x);
  long long eval_count() const noexcept { return count_; }
  const ObjectiveSpec& spec() const noexcept;

  /// View usable by the optimizer; this wrapper must outlive it.
  Objective handle();

 private:
  FunctionId id_;
  Objective target_;
  long long count_ = 0;
};

}  // namespace cab
