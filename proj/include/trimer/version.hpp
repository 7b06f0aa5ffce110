#pragma once

namespace trimer {
inline constexpr const char* kVersion = "0.1.0";
}
