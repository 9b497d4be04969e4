#pragma once

namespace qzeno {
inline constexpr const char* kVersion = "0.1.0";
}
