#pragma once

namespace lvmono {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lvmono
