// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"

namespace wetbeam {

/// 3x3 Fisher information matrix of the RSSI-curve parameter vector
/// (alpha, beta, phi), symmetric and scaled by 1/sigma^2.
class FimMatrix {
 public:
  FimMatrix(const std::array<std::array<double, 3>, 3>& entries, double noise_var);

  double operator()(std::size_t row, std::size_t col) const {
    return entries_.at(row).at(col);
  }
  double noise_variance() const { return noise_var_; }

 private:
  std::array<std::array<double, 3>, 3> entries_;
  double noise_var_;
};

/// Squared triple-sine factor
///   [4 sin((ti-tj)/2) sin((tj-tk)/2) sin((tk-ti)/2)]^2,
/// the building block of det(FIM); zero iff two of the angles coincide
/// (mod 2pi).
double delta_ijk(double theta_i, double theta_j, double theta_k);

/// Fisher information of (alpha, beta, phi) for N observations of
/// alpha + beta cos(theta_n + phi) in Gaussian noise of variance sigma2.
/// Entries are the sums over A_n = cos(theta_n + phi) and
/// D_n = -beta sin(theta_n + phi), all divided by sigma2.
FimMatrix fim(const PairParams& params, const PhaseSet& thetas, double sigma2);

/// Closed-form lower bound on the variance of any unbiased estimate of phi:
/// the (phi, phi) entry of FIM^{-1}. Requires N >= 3 distinct phases and
/// beta > 0, otherwise the bound does not exist (CrlbUnboundedError).
double crlb_phi(const PairParams& params, const PhaseSet& thetas, double sigma2);

/// Phase-averaged variant of crlb_phi (phi uniform over the circle):
///   sigma^2 sum_{i<j} [1 - cos(theta_i - theta_j)] / (beta^2 sum delta_ijk).
/// Equals 2 sigma^2 / (N beta^2) for the uniform training set.
double mcrlb(const PhaseSet& thetas, double beta, double sigma2);

}  // namespace wetbeam
