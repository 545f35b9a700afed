#pragma once

namespace imb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace imb
