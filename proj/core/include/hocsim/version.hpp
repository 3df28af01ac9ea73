// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <string_view>

namespace hocsim {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace hocsim
