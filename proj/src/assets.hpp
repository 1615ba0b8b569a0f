#pragma once

#include <string_view>

namespace flagcolor::detail {

/// Embedded data file by name; empty if unknown.
std::string_view asset(std::string_view name);

}  // namespace flagcolor::detail
