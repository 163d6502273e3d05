#pragma once

namespace fracwave {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracwave
