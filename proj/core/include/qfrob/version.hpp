#pragma once

namespace qfrob {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qfrob
