// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/crlb.hpp"

#include <cmath>
#include <stdexcept>

#include "wetbeam/errors.hpp"

namespace wetbeam {
namespace {

constexpr double kRepeatedPhaseTol = 1e-12;

double sum_delta(const PhaseSet& thetas) {
  const std::size_t n = thetas.size();
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        sum += delta_ijk(thetas.theta(i), thetas.theta(j), thetas.theta(k));
      }
    }
  }
  return sum;
}

void require_bounded(const PhaseSet& thetas, double beta) {
  if (thetas.size() < 3) {
    throw CrlbUnboundedError("CRLB unbounded: need at least 3 training phases");
  }
  if (thetas.has_repeated_phase(kRepeatedPhaseTol)) {
    throw CrlbUnboundedError("CRLB unbounded: repeated training phase");
  }
  if (!(beta > 0.0)) {
    throw CrlbUnboundedError("CRLB unbounded: oscillation amplitude is zero");
  }
}

}  // namespace

FimMatrix::FimMatrix(const std::array<std::array<double, 3>, 3>& entries,
                     double noise_var)
    : entries_(entries), noise_var_(noise_var) {}

double delta_ijk(double theta_i, double theta_j, double theta_k) {
  if (!std::isfinite(theta_i) || !std::isfinite(theta_j) || !std::isfinite(theta_k)) {
    throw std::invalid_argument("delta_ijk: angles must be finite");
  }
  const double s = 4.0 * std::sin((theta_i - theta_j) / 2.0) *
                   std::sin((theta_j - theta_k) / 2.0) *
                   std::sin((theta_k - theta_i) / 2.0);
  return s * s;
}

FimMatrix fim(const PairParams& params, const PhaseSet& thetas, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("fim: noise variance must be positive");
  }
  double sum_a = 0.0, sum_d = 0.0, sum_aa = 0.0, sum_ad = 0.0, sum_dd = 0.0;
  for (std::size_t n = 0; n < thetas.size(); ++n) {
    const double a = std::cos(thetas.theta(n) + params.phi);
    const double d = -params.beta * std::sin(thetas.theta(n) + params.phi);
    sum_a += a;
    sum_d += d;
    sum_aa += a * a;
    sum_ad += a * d;
    sum_dd += d * d;
  }
  const double count = static_cast<double>(thetas.size());
  const std::array<std::array<double, 3>, 3> m = {{
      {count / sigma2, sum_a / sigma2, sum_d / sigma2},
      {sum_a / sigma2, sum_aa / sigma2, sum_ad / sigma2},
      {sum_d / sigma2, sum_ad / sigma2, sum_dd / sigma2},
  }};
  return FimMatrix(m, sigma2);
}

double crlb_phi(const PairParams& params, const PhaseSet& thetas, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("crlb_phi: noise variance must be positive");
  }
  require_bounded(thetas, params.beta);
  const std::size_t n = thetas.size();
  double num = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = std::cos(thetas.theta(i) + params.phi) -
                          std::cos(thetas.theta(j) + params.phi);
      num += diff * diff;
    }
  }
  return sigma2 * num / (params.beta * params.beta * sum_delta(thetas));
}

double mcrlb(const PhaseSet& thetas, double beta, double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("mcrlb: noise variance must be positive");
  }
  require_bounded(thetas, beta);
  const std::size_t n = thetas.size();
  double num = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num += 1.0 - std::cos(thetas.theta(i) - thetas.theta(j));
    }
  }
  return sigma2 * num / (beta * beta * sum_delta(thetas));
}

}  // namespace wetbeam
