#pragma once

namespace signet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace signet
