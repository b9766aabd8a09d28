#pragma once

namespace psalink {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace psalink
