// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/trace.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "wetbeam/format.hpp"

namespace wetbeam {
namespace {

constexpr const char* kHeader = "slot,mini_slot,theta,rssi";

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  return fields;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& why) {
  throw TraceFormatError("trace line " + std::to_string(line_no) + ": " + why);
}

unsigned parse_index(const std::string& token, std::size_t line_no,
                     const char* what) {
  try {
    const double v = parse_double(token);
    const unsigned u = static_cast<unsigned>(v);
    if (static_cast<double>(u) != v) {
      fail_line(line_no, std::string(what) + " must be a non-negative integer");
    }
    return u;
  } catch (const std::invalid_argument&) {
    fail_line(line_no, std::string("bad ") + what + " '" + token + "'");
  }
}

}  // namespace

TrainingTable read_trace(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header.
  if (!std::getline(in, line)) {
    throw TraceFormatError("empty trace");
  }
  ++line_no;
  if (trim(line) != kHeader) {
    fail_line(line_no, std::string("expected header '") + kHeader + "'");
  }

  struct Cell {
    double theta;
    double rssi;
  };
  std::map<std::pair<unsigned, unsigned>, Cell> cells;
  unsigned max_slot = 0;
  unsigned max_mini = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.empty() || content[0] == '#') {
      continue;
    }
    const auto fields = split_fields(content);
    if (fields.size() != 4) {
      fail_line(line_no, "expected 4 comma-separated fields");
    }
    const unsigned slot = parse_index(fields[0], line_no, "slot");
    const unsigned mini = parse_index(fields[1], line_no, "mini_slot");
    if (slot < 2) {
      fail_line(line_no, "slot indices start at 2 (pair with antenna 1)");
    }
    if (mini < 1) {
      fail_line(line_no, "mini-slot indices start at 1");
    }
    double theta = 0.0;
    double rssi = 0.0;
    try {
      theta = parse_double(fields[2]);
      rssi = parse_double(fields[3]);
    } catch (const std::invalid_argument& e) {
      fail_line(line_no, e.what());
    }
    if (!std::isfinite(theta) || !std::isfinite(rssi)) {
      fail_line(line_no, "theta and rssi must be finite");
    }
    if (!cells.emplace(std::make_pair(slot, mini), Cell{theta, rssi}).second) {
      fail_line(line_no, "duplicate record for slot " + std::to_string(slot) +
                             ", mini-slot " + std::to_string(mini));
    }
    max_slot = std::max(max_slot, slot);
    max_mini = std::max(max_mini, mini);
  }
  if (cells.empty()) {
    throw TraceFormatError("trace has a header but no records");
  }

  // The schedule must be complete: slots 2..K, mini-slots 1..N.
  for (unsigned k = 2; k <= max_slot; ++k) {
    for (unsigned n = 1; n <= max_mini; ++n) {
      if (cells.find({k, n}) == cells.end()) {
        throw TraceFormatError("missing feedback for slot " + std::to_string(k) +
                               ", mini-slot " + std::to_string(n));
      }
    }
  }

  // Mini-slot phases must agree across slots.
  std::vector<double> thetas(max_mini);
  for (unsigned n = 1; n <= max_mini; ++n) {
    const double first = cells.at({2, n}).theta;
    for (unsigned k = 3; k <= max_slot; ++k) {
      if (std::abs(cells.at({k, n}).theta - first) > 1e-9) {
        throw TraceFormatError("mini-slot " + std::to_string(n) +
                               " uses different phases in different slots");
      }
    }
    thetas[n - 1] = first;
  }

  TrainingTable table{max_slot, PhaseSet(std::move(thetas)), {}};
  table.records.reserve(cells.size());
  for (unsigned k = 2; k <= max_slot; ++k) {
    for (unsigned n = 1; n <= max_mini; ++n) {
      const Cell& c = cells.at({k, n});
      table.records.push_back(RssiRecord{k, n, table.thetas.theta(n - 1), c.rssi});
    }
  }
  return table;
}

void write_trace(std::ostream& out, const TrainingTable& table) {
  out << kHeader << "\n";
  for (const RssiRecord& r : table.records) {
    out << r.slot << ',' << r.mini_slot << ',' << format_double(r.theta) << ','
        << format_double(r.value) << "\n";
  }
}

}  // namespace wetbeam
