#pragma once

namespace looplab {
inline constexpr const char* kVersion = "0.1.0";
}
