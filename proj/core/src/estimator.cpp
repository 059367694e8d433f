// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/estimator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "wetbeam/angles.hpp"
#include "wetbeam/errors.hpp"

namespace wetbeam {
namespace {

constexpr double kDegenerateTol = 1e-12;

CandidatePair candidates_from_atan2(double y, double x) {
  CandidatePair c;
  c.a = wrap_angle(std::atan2(y, x));
  c.b = wrap_angle(c.a - kPi);
  return c;
}

}  // namespace

PhaseEstimate estimate_noiseless_n3(double r1, double r2, double r3) {
  const double num = std::sqrt(3.0) * (r2 - r3);
  const double den = (r2 - r1) + (r3 - r1);
  if (std::abs(num) < kDegenerateTol && std::abs(den) < kDegenerateTol) {
    throw DegenerateFeedbackError(
        "degenerate feedback: no oscillation across the three mini-slots");
  }
  const double rssi[3] = {r1, r2, r3};
  return resolve_ambiguity(rssi, make_theta(3), candidates_from_atan2(num, den));
}

double ls_objective(std::span<const double> rssi, const PhaseSet& thetas,
                    double alpha, double beta, double phi) {
  if (rssi.size() != thetas.size()) {
    throw std::invalid_argument("ls_objective: feedback/phase count mismatch");
  }
  double sum = 0.0;
  for (std::size_t n = 0; n < rssi.size(); ++n) {
    const double r = rssi[n] - (alpha + beta * std::cos(thetas.theta(n) + phi));
    sum += r * r;
  }
  return sum;
}

CandidatePair estimate_ml(std::span<const double> rssi, const PhaseSet& thetas) {
  if (rssi.size() != thetas.size()) {
    throw std::invalid_argument("estimate_ml: feedback/phase count mismatch");
  }
  if (thetas.size() < 3) {
    throw std::invalid_argument("estimate_ml: need at least 3 feedback values");
  }
  if (!is_definition1(thetas)) {
    throw std::invalid_argument(
        "estimate_ml: training phases must form the uniform 2(n-1)pi/N grid");
  }
  double sum_sin = 0.0;
  double sum_cos = 0.0;
  for (std::size_t n = 0; n < rssi.size(); ++n) {
    sum_sin += rssi[n] * std::sin(thetas.theta(n));
    sum_cos += rssi[n] * std::cos(thetas.theta(n));
  }
  if (std::abs(sum_sin) < kDegenerateTol && std::abs(sum_cos) < kDegenerateTol) {
    throw DegenerateFeedbackError(
        "degenerate feedback: weighted sums vanish (oscillation amplitude ~ 0)");
  }
  return candidates_from_atan2(-sum_sin, sum_cos);
}

PhaseEstimate resolve_ambiguity(std::span<const double> rssi, const PhaseSet& thetas,
                                const CandidatePair& candidates) {
  if (rssi.size() != thetas.size()) {
    throw std::invalid_argument("resolve_ambiguity: feedback/phase count mismatch");
  }
  double disc = 0.0;
  for (std::size_t n = 0; n < rssi.size(); ++n) {
    disc += rssi[n] * std::cos(thetas.theta(n) + candidates.a);
  }
  PhaseEstimate est;
  est.candidate_a = candidates.a;
  est.candidate_b = candidates.b;
  est.discriminant = disc;
  if (disc > 0.0) {
    est.resolved = candidates.a;
  } else if (disc < 0.0) {
    est.resolved = candidates.b;
  } else {
    est.resolved = candidates.a;
    est.tie = true;
  }
  return est;
}

PhaseEstimate estimate_phase(std::span<const double> rssi, const PhaseSet& thetas) {
  return resolve_ambiguity(rssi, thetas, estimate_ml(rssi, thetas));
}

EstimateSet estimate_all_phases(const TrainingTable& table) {
  EstimateSet out;
  out.phases.reserve(table.antenna_count - 1);
  for (unsigned k = 2; k <= table.antenna_count; ++k) {
    const std::vector<double> values = table.slot_values(k);
    try {
      out.phases.push_back(estimate_phase(values, table.thetas).resolved);
    } catch (const DegenerateFeedbackError& e) {
      throw DegenerateFeedbackError("slot " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

EstimateSet exhaustive_baseline(const ChannelVector& h, const SystemParams& sys,
                                double grid_step) {
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("exhaustive_baseline: grid step must be positive");
  }
  if (grid_step > kPi / 2.0) {
    throw std::invalid_argument("exhaustive_baseline: grid step too coarse (> pi/2)");
  }
  const std::size_t free_phases = h.antenna_count() - 1;
  const std::size_t n_pts =
      static_cast<std::size_t>(std::ceil(kTwoPi / grid_step));

  // Phase table and the matching steering factors e^{-j psi}.
  std::vector<double> grid(n_pts);
  std::vector<std::complex<double>> steer(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i) {
    grid[i] = static_cast<double>(i) * grid_step;
    steer[i] = std::polar(1.0, -grid[i]);
  }

  // received_energy with an equal-gain vector is xi P / K |h_1 + sum_k h_k
  // e^{-j psi_k}|^2; the prefactor does not move the argmax, so the search
  // compares the resultant magnitude only.
  std::vector<std::size_t> best(free_phases, 0);
  if (free_phases <= 2) {
    // Plain exhaustive scan.
    double best_val = -1.0;
    std::vector<std::size_t> idx(free_phases, 0);
    for (;;) {
      std::complex<double> sum = h.gain(0);
      for (std::size_t c = 0; c < free_phases; ++c) {
        sum += h.gain(c + 1) * steer[idx[c]];
      }
      const double val = std::norm(sum);
      if (val > best_val) {
        best_val = val;
        best = idx;
      }
      // Odometer increment.
      std::size_t c = 0;
      while (c < free_phases && ++idx[c] == n_pts) {
        idx[c] = 0;
        ++c;
      }
      if (c == free_phases) {
        break;
      }
    }
  } else {
    // Cyclic coordinate ascent on the grid; the objective is unimodal in
    // each coordinate, so this settles in a few passes.
    bool changed = true;
    for (int pass = 0; pass < 100 && changed; ++pass) {
      changed = false;
      for (std::size_t c = 0; c < free_phases; ++c) {
        std::complex<double> partial = h.gain(0);
        for (std::size_t o = 0; o < free_phases; ++o) {
          if (o != c) {
            partial += h.gain(o + 1) * steer[best[o]];
          }
        }
        std::size_t arg = 0;
        double best_val = -1.0;
        for (std::size_t i = 0; i < n_pts; ++i) {
          const double val = std::norm(partial + h.gain(c + 1) * steer[i]);
          if (val > best_val) {
            best_val = val;
            arg = i;
          }
        }
        if (arg != best[c]) {
          best[c] = arg;
          changed = true;
        }
      }
    }
  }

  (void)sys;  // the power budget scales the objective uniformly
  EstimateSet out;
  out.phases.reserve(free_phases);
  for (std::size_t c = 0; c < free_phases; ++c) {
    out.phases.push_back(wrap_angle(grid[best[c]]));
  }
  return out;
}

}  // namespace wetbeam
