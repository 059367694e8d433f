// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

namespace wetbeam {

/// Coefficients of the delivered-power approximation
///   R_WPB(N) = omega1 (1 - omega2 / N):
/// omega1 is the asymptotic (error-free) level, omega2 folds the phase
/// estimation error, whose deviation scales like epsilon / sqrt(N).
struct WpbParams {
  double omega1 = 1.0;
  double omega2 = 0.0;
  double epsilon = 0.0;
};

/// Block timing: total block length T, per-feedback time tau and energy E_f,
/// and the ET antenna count.
struct TimingParams {
  double block_length = 100.0;     // T
  double tau_per_feedback = 1.0;   // tau_{k,n}
  double energy_per_feedback = 0.0;  // E_f
  std::size_t antenna_count = 2;   // K
};

/// Folds the channel-dependent coefficients into WpbParams:
///   omega1 = alpha1 + sum beta_i + sum beta_ij,
///   omega2 = (sum beta_i) epsilon^2 / (2 omega1).
WpbParams omega_params(double alpha1, std::span<const double> betas,
                       std::span<const double> beta_pairs, double epsilon);

/// Delivered power after training with N mini-slots per pair.
double rwpb_approx(const WpbParams& w, std::size_t n_phases);

/// Energy harvested over one block: WPB power times the time left after
/// training, minus the feedback energy. Throws InfeasibleTrainingError when
/// training does not fit in the block.
double e_total(const WpbParams& w, const TimingParams& t, std::size_t n_phases);

struct NStarResult {
  double analytic = 0.0;  // unclamped real root sqrt(psi T / (K-1))
  int clamped = 3;        // feasible integer maximizing e_total near the root
};

/// Training length maximizing e_total. The analytic stationary point is
///   N* = sqrt(psi T / (K-1)),  psi = omega1 omega2 tau / (omega1 tau + E_f),
/// clamped into [3, sqrt(3T/(K-1))]; the integer result picks the best of
/// floor/ceil and the interval ends. Throws InfeasibleTrainingError when even
/// N = 3 cannot harvest energy ("block too short to harvest").
NStarResult n_star(const WpbParams& w, const TimingParams& t);

/// Exact integer argmax of e_total over N in [3, floor(T / ((K-1) tau)) - 1];
/// oracle for n_star. Ties break towards smaller N.
int n_star_brute(const WpbParams& w, const TimingParams& t);

}  // namespace wetbeam
