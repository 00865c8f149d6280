#pragma once

namespace ggm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ggm
