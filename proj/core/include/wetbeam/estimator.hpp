// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wetbeam/beam.hpp"
#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/rssi_sim.hpp"

namespace wetbeam {

/// The two arctangent solutions for the phase difference, pi apart.
struct CandidatePair {
  double a = 0.0;  // wrapped to (-pi, pi]
  double b = 0.0;  // wrap(a - pi)
};

/// A resolved phase estimate. `discriminant` is sum_n R_n cos(theta_n + a);
/// its sign selects the candidate that is a minimum of the least-squares
/// objective (equivalently, the RSSI-maximizing one).
struct PhaseEstimate {
  double candidate_a = 0.0;
  double candidate_b = 0.0;
  double resolved = 0.0;
  double discriminant = 0.0;
  bool tie = false;  // discriminant was exactly zero; candidate_a returned
};

/// Closed-form inversion of three noiseless feedback values taken at the
/// uniform N=3 training phases:
///   phi = atan( sqrt(3) (R2 - R3) / ((R2 - R1) + (R3 - R1)) ),
/// with the arctangent ambiguity resolved internally.
PhaseEstimate estimate_noiseless_n3(double r1, double r2, double r3);

/// Least-squares training misfit sum_n [R_n - (alpha + beta cos(theta_n + phi))]^2.
double ls_objective(std::span<const double> rssi, const PhaseSet& thetas,
                    double alpha, double beta, double phi);

/// ML estimate of the phase difference from N >= 3 feedback values taken at
/// the uniform training phases:
///   phi = atan( -sum R_n sin theta_n / sum R_n cos theta_n ).
/// The offset and amplitude drop out (the uniform-grid trigonometric sums
/// vanish), so no nuisance parameters are estimated. Returns both
/// arctangent candidates; throws DegenerateFeedbackError when both weighted
/// sums are below 1e-12.
CandidatePair estimate_ml(std::span<const double> rssi, const PhaseSet& thetas);

/// Picks the candidate with sum_n R_n cos(theta_n + candidate) > 0 (the
/// second-derivative test; no extra feedback needed). An exact zero is
/// flagged as a tie and candidate_a is returned.
PhaseEstimate resolve_ambiguity(std::span<const double> rssi, const PhaseSet& thetas,
                                const CandidatePair& candidates);

/// estimate_ml + resolve_ambiguity in one call.
PhaseEstimate estimate_phase(std::span<const double> rssi, const PhaseSet& thetas);

/// The K-1 resolved phase estimates, slot order 2..K.
struct EstimateSet {
  std::vector<double> phases;
};

/// Runs the ML estimator with ambiguity resolution on every pair slot of a
/// training table. Degeneracy in a slot is reported with its slot index.
EstimateSet estimate_all_phases(const TrainingTable& table);

/// Full-CSI comparator: maximizes the true received energy over a uniform
/// grid (spacing grid_step, covering [0, 2pi)) of equal-gain phase vectors.
/// Exhaustive for up to two free phases, cyclic coordinate ascent on the
/// same grid for more. Ties keep the first (origin-most) grid point.
EstimateSet exhaustive_baseline(const ChannelVector& h, const SystemParams& sys,
                                double grid_step);

}  // namespace wetbeam
