#pragma once

#include <string_view>

namespace hypermediator {

inline constexpr std::string_view kToolName = "hypermediator";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace hypermediator
