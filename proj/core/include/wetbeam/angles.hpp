// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wetbeam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle to the canonical interval (-pi, pi].
inline double wrap_angle(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("wrap_angle: angle must be finite");
  }
  double r = std::remainder(x, kTwoPi);  // in [-pi, pi]
  if (r == -kPi) {
    r = kPi;
  }
  return r + 0.0;  // normalize -0.0
}

inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }
inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }

}  // namespace wetbeam
