#pragma once

namespace ansatzforge {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "ansatzforge";

} // namespace ansatzforge
