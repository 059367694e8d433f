// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wetbeam/errors.hpp"

namespace wetbeam {
namespace {

void validate_timing(const TimingParams& t) {
  if (t.antenna_count < 2) {
    throw std::invalid_argument("TimingParams: need at least two antennas");
  }
  if (!(t.block_length > 0.0) || !(t.tau_per_feedback > 0.0) ||
      !(t.energy_per_feedback >= 0.0)) {
    throw std::invalid_argument("TimingParams: T and tau must be positive, E_f >= 0");
  }
}

double pair_slots(const TimingParams& t, std::size_t n_phases) {
  return static_cast<double>(n_phases) * static_cast<double>(t.antenna_count - 1);
}

}  // namespace

WpbParams omega_params(double alpha1, std::span<const double> betas,
                       std::span<const double> beta_pairs, double epsilon) {
  if (!(alpha1 > 0.0)) {
    throw std::invalid_argument("omega_params: alpha1 must be positive");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("omega_params: epsilon must be >= 0");
  }
  double beta_sum = 0.0;
  for (const double b : betas) {
    if (!(b >= 0.0)) {
      throw std::invalid_argument("omega_params: betas must be >= 0");
    }
    beta_sum += b;
  }
  double pair_sum = 0.0;
  for (const double b : beta_pairs) {
    pair_sum += b;
  }
  WpbParams w;
  w.omega1 = alpha1 + beta_sum + pair_sum;
  if (!(w.omega1 > 0.0)) {
    throw std::invalid_argument("omega_params: omega1 must be positive");
  }
  w.omega2 = beta_sum * epsilon * epsilon / (2.0 * w.omega1);
  w.epsilon = epsilon;
  return w;
}

double rwpb_approx(const WpbParams& w, std::size_t n_phases) {
  if (n_phases == 0) {
    throw std::invalid_argument("rwpb_approx: need at least one mini-slot");
  }
  return w.omega1 * (1.0 - w.omega2 / static_cast<double>(n_phases));
}

double e_total(const WpbParams& w, const TimingParams& t, std::size_t n_phases) {
  validate_timing(t);
  const double training_time = pair_slots(t, n_phases) * t.tau_per_feedback;
  if (!(t.block_length > training_time)) {
    throw InfeasibleTrainingError("infeasible N: training does not fit in the block");
  }
  return (t.block_length - training_time) * rwpb_approx(w, n_phases) -
         pair_slots(t, n_phases) * t.energy_per_feedback;
}

NStarResult n_star(const WpbParams& w, const TimingParams& t) {
  validate_timing(t);
  const double k1 = static_cast<double>(t.antenna_count - 1);
  if (3.0 * k1 * t.tau_per_feedback >= t.block_length ||
      !(e_total(w, t, 3) > 0.0)) {
    throw InfeasibleTrainingError("block too short to harvest");
  }

  const double psi = w.omega1 * w.omega2 * t.tau_per_feedback /
                     (w.omega1 * t.tau_per_feedback + t.energy_per_feedback);
  NStarResult result;
  result.analytic = std::sqrt(psi * t.block_length / k1);

  const double upper = std::sqrt(3.0 * t.block_length / k1);
  const double clamped_root = std::clamp(result.analytic, 3.0, upper);

  std::vector<std::size_t> cands = {
      static_cast<std::size_t>(std::floor(clamped_root)),
      static_cast<std::size_t>(std::ceil(clamped_root)),
      3,
      static_cast<std::size_t>(std::floor(upper)),
  };
  double best_val = 0.0;
  std::size_t best_n = 0;
  for (const std::size_t n : cands) {
    if (n < 3 || pair_slots(t, n) * t.tau_per_feedback >= t.block_length) {
      continue;
    }
    const double val = e_total(w, t, n);
    if (best_n == 0 || val > best_val) {
      best_val = val;
      best_n = n;
    }
  }
  result.clamped = static_cast<int>(best_n);
  return result;
}

int n_star_brute(const WpbParams& w, const TimingParams& t) {
  validate_timing(t);
  const double k1 = static_cast<double>(t.antenna_count - 1);
  const long n_max =
      static_cast<long>(std::floor(t.block_length / (k1 * t.tau_per_feedback))) - 1;
  if (n_max < 3) {
    throw InfeasibleTrainingError("block too short to harvest");
  }
  long best_n = 3;
  double best_val = e_total(w, t, 3);
  for (long n = 4; n <= n_max; ++n) {
    const double val = e_total(w, t, static_cast<std::size_t>(n));
    if (val > best_val) {
      best_val = val;
      best_n = n;
    }
  }
  return static_cast<int>(best_n);
}

}  // namespace wetbeam
