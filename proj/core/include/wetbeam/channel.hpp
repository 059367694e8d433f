// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "wetbeam/rng.hpp"

namespace wetbeam {

/// Energy-harvester conversion efficiency and total transmit power budget.
class SystemParams {
 public:
  SystemParams(double xi, double power);

  double xi() const { return xi_; }
  double power() const { return power_; }

 private:
  double xi_;
  double power_;
};

/// Quasi-static multi-antenna channel towards the single-antenna receiver:
/// one complex gain |h_k| e^{j delta_k} per transmit antenna, K >= 2.
class ChannelVector {
 public:
  explicit ChannelVector(std::vector<std::complex<double>> gains);

  std::size_t antenna_count() const { return gains_.size(); }
  const std::complex<double>& gain(std::size_t k) const { return gains_.at(k); }
  const std::vector<std::complex<double>>& gains() const { return gains_; }

  double magnitude(std::size_t k) const { return std::abs(gains_.at(k)); }
  /// Phase delta_k in (-pi, pi].
  double phase(std::size_t k) const;

 private:
  std::vector<std::complex<double>> gains_;
};

/// Parameters of the two-antenna RSSI curve alpha + beta cos(theta + phi):
/// a DC offset, an oscillation amplitude and the channel phase difference.
struct PairParams {
  double alpha = 0.0;  // offset, alpha >= beta >= 0
  double beta = 0.0;   // oscillation amplitude
  double phi = 0.0;    // phase difference, wrapped to (-pi, pi]
};

/// Maps a pair of channel gains to the RSSI-curve parameters:
///   alpha = xi P / 4 (|h_i|^2 + |h_j|^2),
///   beta  = xi P / 2 |h_i| |h_j|,
///   phi   = arg(h_j) - arg(h_i), wrapped.
PairParams derive_pair_params(const std::complex<double>& h_i,
                              const std::complex<double>& h_j,
                              const SystemParams& sys);

/// Channel generator used by the Monte Carlo experiments.
struct ChannelModel {
  enum class Kind {
    kUnitMagnitudeUniformPhase,  // |h_k| = 1, phases uniform
    kRayleigh,                   // i.i.d. complex normal, E|h_k|^2 = mean_square_gain
    kFixed,                      // returns fixed_gains verbatim
  };

  Kind kind = Kind::kUnitMagnitudeUniformPhase;
  double mean_square_gain = 1.0;
  std::vector<std::complex<double>> fixed_gains;

  static ChannelModel unit_magnitude();
  static ChannelModel rayleigh(double mean_square_gain = 1.0);
  static ChannelModel fixed(std::vector<std::complex<double>> gains);
  /// Accepts "unit-magnitude-uniform-phase" (alias "unit") or "rayleigh".
  static ChannelModel parse(const std::string& name);
};

/// Draws a K-antenna channel. Deterministic given the stream position.
ChannelVector sample_channel(const ChannelModel& model, std::size_t antenna_count,
                             RngStream& rng);

}  // namespace wetbeam
