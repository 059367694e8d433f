// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace wetbeam {

inline constexpr const char* kVersion = "wetbeam-0.1.0";

}  // namespace wetbeam
