// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wetbeam::tools {

/// A rectangular numeric result with '#'-prefixed provenance lines above the
/// CSV header. Serialization is byte-stable: LF endings, '.' decimals,
/// shortest round-trip formatting.
struct ResultTable {
  std::vector<std::string> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void append_row(std::vector<double> row);
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

}  // namespace wetbeam::tools
