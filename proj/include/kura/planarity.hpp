#pragma once

#include "kura/graph.hpp"

namespace kura {

// Planarity decision (linear-time backend behind this call).
bool is_planar(const Graph& g);

}  // namespace kura
