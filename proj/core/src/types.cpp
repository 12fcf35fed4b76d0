#include "cab/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace cab {

SearchBounds::SearchBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) {
    throw std::invalid_argument("bounds: dimension must be at least 1");
  }
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("bounds: lower and upper must have the same length");
  }
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j])) {
      throw std::invalid_argument("bounds: lower[" + std::to_string(j) +
                                  "] must be strictly below upper[" + std::to_string(j) + "]");
    }
  }
}

bool SearchBounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != lower_.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
  }
  return true;
}

void SearchBounds::clamp(std::span<double> x) const noexcept {
  for (std::size_t j = 0; j < x.size() && j < lower_.size(); ++j) {
    x[j] = std::clamp(x[j], lower_[j], upper_[j]);
  }
}

void Params::validate() const {
  if (population_size < 1) {
    throw std::invalid_argument("params: population_size (Np) must be positive");
  }
  if (memory_size < 1) {
    throw std::invalid_argument("params: memory_size (B) must be positive");
  }
  if (memory_size > population_size) {
    throw std::invalid_argument("params: memory_size (B) must not exceed population_size (Np)");
  }
  if (history_prob < 0.0 || history_prob > 1.0) {
    throw std::invalid_argument("params: history_prob (H) must lie in [0, 1]");
  }
  if (random_prob < 0.0 || random_prob > 1.0) {
    throw std::invalid_argument("params: random_prob (P) must lie in [0, 1]");
  }
  if (iterations < 0) {
    throw std::invalid_argument("params: iterations (NI) must be non-negative");
  }
  if (rho_override && !(*rho_override > 0.0)) {
    throw std::invalid_argument("params: rho_override must be positive");
  }
  if (!(perturb_fraction > 0.0)) {
    throw std::invalid_argument("params: perturb_fraction must be positive");
  }
}

}  // namespace cab
