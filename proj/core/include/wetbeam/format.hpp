// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace wetbeam {

/// Locale-independent decimal formatting with 17 significant digits,
/// enough for doubles to round-trip exactly.
std::string format_double(double value);

/// Locale-independent parse of a full token as double; throws
/// std::invalid_argument when the token is not a plain finite number.
double parse_double(const std::string& token);

}  // namespace wetbeam
