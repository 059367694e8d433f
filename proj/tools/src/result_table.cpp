// SPDX-License-Identifier: Apache-2.0
#include "result_table.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wetbeam/format.hpp"

namespace wetbeam::tools {

void ResultTable::append_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("ResultTable: row width does not match column count");
  }
  rows.push_back(std::move(row));
}

void ResultTable::write_csv(std::ostream& out) const {
  for (const std::string& line : provenance) {
    out << "# " << line << "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i != 0 ? "," : "") << columns[i];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw std::logic_error("ResultTable: ragged row");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i != 0 ? "," : "") << format_double(row[i]);
    }
    out << "\n";
  }
}

std::string ResultTable::to_csv() const {
  std::ostringstream ss;
  write_csv(ss);
  return ss.str();
}

}  // namespace wetbeam::tools
