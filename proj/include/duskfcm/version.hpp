#pragma once

namespace duskfcm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace duskfcm
