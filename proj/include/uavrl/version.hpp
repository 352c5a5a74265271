#pragma once

namespace uavrl {

inline constexpr const char* kToolName = "uavrl";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace uavrl
