#pragma once

namespace chgraph {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace chgraph
