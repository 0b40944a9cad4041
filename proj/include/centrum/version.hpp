#pragma once

namespace centrum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace centrum
