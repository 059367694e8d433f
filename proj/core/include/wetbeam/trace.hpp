// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wetbeam/rssi_sim.hpp"

namespace wetbeam {

/// A recorded-trace problem, carrying the 1-based line number when the
/// offending row is known.
class TraceFormatError : public std::runtime_error {
 public:
  explicit TraceFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Reads a feedback trace in the replay CSV format
///   slot,mini_slot,theta,rssi
/// into a training table. Rows may arrive in any order; the schedule must be
/// complete (every (slot, mini-slot) cell exactly once, slots 2..K and
/// mini-slots 1..N contiguous) and all rows of a mini-slot must agree on
/// theta. Throws TraceFormatError with the line number or the missing cell.
TrainingTable read_trace(std::istream& in);

/// Writes a training table in the replay CSV format.
void write_trace(std::ostream& out, const TrainingTable& table);

}  // namespace wetbeam
