#pragma once

namespace waring {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace waring
