#pragma once

namespace guiverify {

inline constexpr const char* kToolName = "gui-verify";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kVersionMajor = 1;

}  // namespace guiverify
