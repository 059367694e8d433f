// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "wetbeam/beam.hpp"
#include "wetbeam/rng.hpp"

namespace wetbeam {

/// An ordered set of N training phases in [0, 2pi).
class PhaseSet {
 public:
  explicit PhaseSet(std::vector<double> thetas);

  std::size_t size() const { return thetas_.size(); }
  double theta(std::size_t n) const { return thetas_.at(n); }
  const std::vector<double>& thetas() const { return thetas_; }

  /// True if any two phases coincide (mod 2pi) within `tol`.
  bool has_repeated_phase(double tol = 1e-12) const;

 private:
  std::vector<double> thetas_;
};

/// Uniform training phase set theta_n = 2 (n-1) pi / N, n = 1..N.
/// This spacing minimizes the averaged phase-error bound (2 sigma^2 / (N beta^2)).
PhaseSet make_theta(std::size_t n_phases);

/// N phases drawn i.i.d. uniform on [0, 2pi); comparison baseline for the
/// uniform set.
PhaseSet random_phase_set(std::size_t n_phases, RngStream& rng);

/// True if `set` equals { 2 (n-1) pi / N } as a set, each phase within `tol`.
bool is_definition1(const PhaseSet& set, double tol = 1e-9);

/// The N two-antenna training vectors b_n = sqrt(P/2) [1, e^{j theta_n}].
struct Codebook {
  PhaseSet source;
  std::vector<BeamVector> vectors;
};

Codebook make_codebook(const PhaseSet& thetas, double total_power);

}  // namespace wetbeam
