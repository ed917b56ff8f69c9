#pragma once

namespace qcubic {

inline constexpr const char* version = "0.1.0";

} // namespace qcubic
