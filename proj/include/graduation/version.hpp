#pragma once

namespace graduation {

inline constexpr const char* version = "1.0.0";

}  // namespace graduation
