// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/rssi_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace wetbeam {

std::vector<double> TrainingTable::slot_values(unsigned slot) const {
  std::vector<double> values;
  values.reserve(thetas.size());
  for (const RssiRecord& r : records) {
    if (r.slot == slot) {
      values.push_back(r.value);
    }
  }
  if (values.size() != thetas.size()) {
    throw std::out_of_range("TrainingTable: slot " + std::to_string(slot) +
                            " has " + std::to_string(values.size()) +
                            " records, expected " + std::to_string(thetas.size()));
  }
  return values;
}

double rssi_mean(const PairParams& params, double theta) {
  return params.alpha + params.beta * std::cos(theta + params.phi);
}

double simulate_rssi(const PairParams& params, double theta,
                     const NoiseModel& noise, RngStream& rng) {
  if (!(noise.sigma2 >= 0.0)) {
    throw std::invalid_argument("simulate_rssi: noise variance must be >= 0");
  }
  return rssi_mean(params, theta) + std::sqrt(noise.sigma2) * rng.next_gaussian();
}

TrainingTable run_training(const ChannelVector& h, const PhaseSet& thetas,
                           const SystemParams& sys, const NoiseModel& noise,
                           const RngStream& rng) {
  if (!(noise.sigma2 >= 0.0)) {
    throw std::invalid_argument("run_training: noise variance must be >= 0");
  }
  const std::size_t antennas = h.antenna_count();
  const double sigma = std::sqrt(noise.sigma2);
  const TrainingSchedule schedule{antennas, thetas.size()};

  TrainingTable table{antennas, thetas, {}};
  table.records.reserve(schedule.record_count());
  for (unsigned k = 2; k <= antennas; ++k) {
    const PairParams pair = derive_pair_params(h.gain(0), h.gain(k - 1), sys);
    for (unsigned n = 1; n <= thetas.size(); ++n) {
      const double theta = thetas.theta(n - 1);
      const double z = sigma * rng.gaussian_at(k, n);
      table.records.push_back(RssiRecord{k, n, theta, rssi_mean(pair, theta) + z});
    }
  }
  return table;
}

TrainingOverhead training_overhead(std::size_t antenna_count, std::size_t n_phases,
                                   double tau_per_feedback,
                                   double energy_per_feedback) {
  if (antenna_count < 2) {
    throw std::invalid_argument("training_overhead: need at least two antennas");
  }
  if (!(tau_per_feedback > 0.0) || !(energy_per_feedback > 0.0)) {
    throw std::invalid_argument("training_overhead: tau and E_f must be positive");
  }
  const double slots = static_cast<double>(n_phases) *
                       static_cast<double>(antenna_count - 1);
  return TrainingOverhead{slots * tau_per_feedback, slots * energy_per_feedback};
}

}  // namespace wetbeam
