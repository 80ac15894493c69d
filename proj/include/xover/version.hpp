#pragma once

namespace xover {

inline constexpr const char* kVersion = "0.1.0";

} // namespace xover
