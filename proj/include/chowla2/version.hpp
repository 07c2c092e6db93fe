#pragma once

namespace chowla2 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chowla2
