// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "wetbeam/angles.hpp"

namespace wetbeam {

SystemParams::SystemParams(double xi, double power) : xi_(xi), power_(power) {
  if (!(xi > 0.0) || !(xi <= 1.0)) {
    throw std::invalid_argument("SystemParams: conversion efficiency must be in (0, 1]");
  }
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("SystemParams: transmit power must be positive");
  }
}

ChannelVector::ChannelVector(std::vector<std::complex<double>> gains)
    : gains_(std::move(gains)) {
  if (gains_.size() < 2) {
    throw std::invalid_argument("ChannelVector: need at least two antennas");
  }
}

double ChannelVector::phase(std::size_t k) const {
  const double d = std::arg(gains_.at(k));
  return d == -kPi ? kPi : d;
}

PairParams derive_pair_params(const std::complex<double>& h_i,
                              const std::complex<double>& h_j,
                              const SystemParams& sys) {
  const double mi = std::abs(h_i);
  const double mj = std::abs(h_j);
  const double xp = sys.xi() * sys.power();
  PairParams p;
  p.alpha = xp / 4.0 * (mi * mi + mj * mj);
  p.beta = xp / 2.0 * (mi * mj);
  // arg(h_j conj(h_i)) is the wrapped phase difference; arg(0) = 0 covers
  // the degenerate beta = 0 pair.
  const double d = std::arg(h_j * std::conj(h_i));
  p.phi = d == -kPi ? kPi : d;
  return p;
}

ChannelModel ChannelModel::unit_magnitude() {
  ChannelModel m;
  m.kind = Kind::kUnitMagnitudeUniformPhase;
  return m;
}

ChannelModel ChannelModel::rayleigh(double mean_square_gain) {
  if (!(mean_square_gain > 0.0)) {
    throw std::invalid_argument("ChannelModel: mean square gain must be positive");
  }
  ChannelModel m;
  m.kind = Kind::kRayleigh;
  m.mean_square_gain = mean_square_gain;
  return m;
}

ChannelModel ChannelModel::fixed(std::vector<std::complex<double>> gains) {
  ChannelModel m;
  m.kind = Kind::kFixed;
  m.fixed_gains = std::move(gains);
  return m;
}

ChannelModel ChannelModel::parse(const std::string& name) {
  if (name == "unit-magnitude-uniform-phase" || name == "unit") {
    return unit_magnitude();
  }
  if (name == "rayleigh") {
    return rayleigh();
  }
  throw std::invalid_argument("ChannelModel: unknown model '" + name + "'");
}

ChannelVector sample_channel(const ChannelModel& model, std::size_t antenna_count,
                             RngStream& rng) {
  if (antenna_count < 2) {
    throw std::invalid_argument("sample_channel: need at least two antennas");
  }
  std::vector<std::complex<double>> gains;
  gains.reserve(antenna_count);
  switch (model.kind) {
    case ChannelModel::Kind::kFixed:
      if (model.fixed_gains.size() != antenna_count) {
        throw std::invalid_argument("sample_channel: fixed gains size mismatch");
      }
      gains = model.fixed_gains;
      break;
    case ChannelModel::Kind::kUnitMagnitudeUniformPhase:
      for (std::size_t k = 0; k < antenna_count; ++k) {
        const double phase = kTwoPi * rng.next_uniform() - kPi;  // (-pi, pi]
        gains.emplace_back(std::polar(1.0, phase));
      }
      break;
    case ChannelModel::Kind::kRayleigh: {
      const double s = std::sqrt(model.mean_square_gain / 2.0);
      for (std::size_t k = 0; k < antenna_count; ++k) {
        gains.emplace_back(s * rng.next_gaussian(), s * rng.next_gaussian());
      }
      break;
    }
  }
  return ChannelVector(std::move(gains));
}

}  // namespace wetbeam
