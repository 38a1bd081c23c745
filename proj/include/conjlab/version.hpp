#pragma once

namespace conjlab {

inline constexpr const char* kToolName = "conjlab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace conjlab
