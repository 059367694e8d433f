// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wetbeam/angles.hpp"

namespace wetbeam {

PhaseSet::PhaseSet(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.empty()) {
    throw std::invalid_argument("PhaseSet: need at least one phase");
  }
  for (double& t : thetas_) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("PhaseSet: phases must be finite");
    }
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) {
      t += kTwoPi;
    }
  }
}

bool PhaseSet::has_repeated_phase(double tol) const {
  for (std::size_t i = 0; i + 1 < thetas_.size(); ++i) {
    for (std::size_t j = i + 1; j < thetas_.size(); ++j) {
      if (std::abs(wrap_angle(thetas_[i] - thetas_[j])) < tol) {
        return true;
      }
    }
  }
  return false;
}

PhaseSet make_theta(std::size_t n_phases) {
  if (n_phases == 0) {
    throw std::invalid_argument("make_theta: need at least one phase");
  }
  std::vector<double> t(n_phases);
  for (std::size_t n = 0; n < n_phases; ++n) {
    t[n] = kTwoPi * static_cast<double>(n) / static_cast<double>(n_phases);
  }
  return PhaseSet(std::move(t));
}

PhaseSet random_phase_set(std::size_t n_phases, RngStream& rng) {
  if (n_phases == 0) {
    throw std::invalid_argument("random_phase_set: need at least one phase");
  }
  std::vector<double> t(n_phases);
  for (double& v : t) {
    v = kTwoPi * rng.next_uniform();
  }
  return PhaseSet(std::move(t));
}

bool is_definition1(const PhaseSet& set, double tol) {
  std::vector<double> sorted = set.thetas();
  // Values a hair below 2pi are the same grid point as 0.
  for (double& t : sorted) {
    if (t > kTwoPi - tol) {
      t = 0.0;
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    if (std::abs(sorted[i] - expected) > tol) {
      return false;
    }
  }
  return true;
}

Codebook make_codebook(const PhaseSet& thetas, double total_power) {
  if (!(total_power > 0.0)) {
    throw std::invalid_argument("make_codebook: power must be positive");
  }
  Codebook book{thetas, {}};
  book.vectors.reserve(thetas.size());
  for (std::size_t n = 0; n < thetas.size(); ++n) {
    const double phases[2] = {0.0, thetas.theta(n)};
    book.vectors.push_back(BeamVector::equal_gain(phases, total_power));
  }
  return book;
}

}  // namespace wetbeam
