// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wetbeam {

/// The feedback carries no usable phase information (oscillation amplitude
/// is effectively zero, e.g. one antenna of the active pair is in a null).
class DegenerateFeedbackError : public std::runtime_error {
 public:
  explicit DegenerateFeedbackError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The phase-error variance bound does not exist for the requested setup
/// (fewer than three training phases, repeated phases, or zero amplitude).
class CrlbUnboundedError : public std::domain_error {
 public:
  explicit CrlbUnboundedError(const std::string& what)
      : std::domain_error(what) {}
};

/// Training-length bookkeeping rejected the request (training would not fit
/// in the transmission block, or the block is too short to harvest at all).
class InfeasibleTrainingError : public std::domain_error {
 public:
  explicit InfeasibleTrainingError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace wetbeam
