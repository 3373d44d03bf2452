#pragma once

namespace vanorder {

inline constexpr const char* kToolkitName = "vanorder";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace vanorder
