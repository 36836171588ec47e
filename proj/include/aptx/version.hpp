#pragma once

namespace aptx {

inline constexpr const char* kToolName = "aptx-lab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace aptx
