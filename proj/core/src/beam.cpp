// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/beam.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wetbeam {

BeamVector::BeamVector(std::vector<std::complex<double>> weights, double power)
    : weights_(std::move(weights)), power_(power) {}

BeamVector BeamVector::equal_gain(std::span<const double> weight_phases,
                                  double total_power) {
  if (weight_phases.empty()) {
    throw std::invalid_argument("BeamVector: need at least one antenna phase");
  }
  if (!(total_power > 0.0)) {
    throw std::invalid_argument("BeamVector: power budget must be positive");
  }
  const double amp = std::sqrt(total_power / static_cast<double>(weight_phases.size()));
  std::vector<std::complex<double>> w;
  w.reserve(weight_phases.size());
  for (const double psi : weight_phases) {
    if (!std::isfinite(psi)) {
      throw std::invalid_argument("BeamVector: weight phase must be finite");
    }
    w.push_back(std::polar(amp, psi));
  }
  return BeamVector(std::move(w), total_power);
}

BeamVector egt_beam_vector(std::span<const double> phase_estimates,
                           const SystemParams& sys) {
  if (phase_estimates.empty()) {
    throw std::invalid_argument("egt_beam_vector: empty phase list");
  }
  std::vector<double> weight_phases;
  weight_phases.reserve(phase_estimates.size() + 1);
  weight_phases.push_back(0.0);  // reference antenna
  for (const double phi : phase_estimates) {
    weight_phases.push_back(-phi);
  }
  return BeamVector::equal_gain(weight_phases, sys.power());
}

double received_energy(const ChannelVector& h, const BeamVector& w, double xi) {
  if (h.antenna_count() != w.antenna_count()) {
    throw std::invalid_argument("received_energy: channel/beam dimension mismatch");
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < h.antenna_count(); ++k) {
    sum += w.weight(k) * h.gain(k);
  }
  return xi * std::norm(sum);
}

}  // namespace wetbeam
