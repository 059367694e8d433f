// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wetbeam/channel.hpp"

namespace wetbeam {

/// Equal-gain beamforming vector: every antenna transmits at sqrt(P/K), only
/// the per-antenna phases are steered. Squared norm equals the power budget.
class BeamVector {
 public:
  /// Builds sqrt(P/K) [e^{j psi_1}, ..., e^{j psi_K}] from per-antenna
  /// weight phases.
  static BeamVector equal_gain(std::span<const double> weight_phases,
                               double total_power);

  std::size_t antenna_count() const { return weights_.size(); }
  const std::complex<double>& weight(std::size_t k) const { return weights_.at(k); }
  const std::vector<std::complex<double>>& weights() const { return weights_; }
  double power_budget() const { return power_; }

 private:
  BeamVector(std::vector<std::complex<double>> weights, double power);

  std::vector<std::complex<double>> weights_;
  double power_;
};

/// Beamforming vector for the power-delivery stage,
/// sqrt(P/K) [1, e^{-j phi_2}, ..., e^{-j phi_K}], built from the K-1
/// estimated channel phase differences.
BeamVector egt_beam_vector(std::span<const double> phase_estimates,
                           const SystemParams& sys);

/// Received energy xi |sum_k w_k h_k|^2 for a transmit vector w over
/// channel h (the receiver sees the plain sum of the per-antenna signals).
double received_energy(const ChannelVector& h, const BeamVector& w, double xi);

}  // namespace wetbeam
