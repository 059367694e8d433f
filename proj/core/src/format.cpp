// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/format.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace wetbeam {

std::string format_double(double value) {
  char buf[40];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: buffer too small");
  }
  return std::string(buf, ptr);
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw std::invalid_argument("not a number: '" + token + "'");
  }
  return value;
}

}  // namespace wetbeam
