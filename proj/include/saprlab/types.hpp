#pragma once

#include <cstdint>

namespace saprlab {

using NodeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

}  // namespace saprlab
