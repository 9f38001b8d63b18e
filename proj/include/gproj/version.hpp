#pragma once

namespace gproj {
inline constexpr const char* kVersion = "0.1.0";
}
