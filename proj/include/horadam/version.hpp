#pragma once

namespace horadam {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace horadam
