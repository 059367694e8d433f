// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/rng.hpp"

namespace wetbeam {

/// Zero-mean i.i.d. Gaussian perturbation on each measured RSSI value.
/// sigma2 = 0 selects the noiseless mode.
struct NoiseModel {
  double sigma2 = 0.0;
};

/// One feedback value: pair slot k (2..K, the antenna paired with antenna 1),
/// mini-slot n (1..N), the training phase used, and the measured energy.
struct RssiRecord {
  unsigned slot = 2;
  unsigned mini_slot = 1;
  double theta = 0.0;
  double value = 0.0;
};

/// The pairwise activation plan: K-1 slots of N mini-slots each; slot k-1
/// activates antennas (1, k) and sweeps the whole codebook.
struct TrainingSchedule {
  std::size_t antenna_count = 2;  // K
  std::size_t n_phases = 3;      // N

  std::size_t record_count() const { return (antenna_count - 1) * n_phases; }
  /// Antennas active during pair slot k (2..K): the reference and antenna k.
  static std::pair<unsigned, unsigned> active_antennas(unsigned slot) {
    return {1u, slot};
  }
};

/// All feedback gathered in one training stage: (K-1) x N records in
/// schedule order (slot-major). Slot k-1 activates antennas (1, k).
struct TrainingTable {
  std::size_t antenna_count = 2;
  PhaseSet thetas;
  std::vector<RssiRecord> records;

  /// The N feedback values of pair slot k (2..K), ordered by mini-slot.
  std::vector<double> slot_values(unsigned slot) const;
};

/// Noise-free RSSI alpha + beta cos(theta + phi).
double rssi_mean(const PairParams& params, double theta);

/// One noisy measurement; the perturbation is the next sequential draw of
/// `rng` scaled to sigma, so the value is reproducible from the stream
/// position. Values may be negative under large noise; they are not clamped
/// (the estimator is linear in the feedback, clamping would bias it).
double simulate_rssi(const PairParams& params, double theta,
                     const NoiseModel& noise, RngStream& rng);

/// Runs the whole training stage for channel h: for each pair slot k
/// (antennas 1 and k), transmits every codebook entry and records the noisy
/// RSSI. Noise draws are addressed by (slot, mini-slot) on `rng`, so tables
/// are identical no matter how record generation is ordered or parallelized.
TrainingTable run_training(const ChannelVector& h, const PhaseSet& thetas,
                           const SystemParams& sys, const NoiseModel& noise,
                           const RngStream& rng);

struct TrainingOverhead {
  double time = 0.0;    // N (K-1) tau
  double energy = 0.0;  // N (K-1) E_f
};

/// Time and energy spent feeding back N values for each of the K-1 slots.
TrainingOverhead training_overhead(std::size_t antenna_count, std::size_t n_phases,
                                   double tau_per_feedback, double energy_per_feedback);

}  // namespace wetbeam
