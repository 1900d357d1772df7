#pragma once

namespace tribell {

inline constexpr const char* kVersion = "0.1.0";

} // namespace tribell
