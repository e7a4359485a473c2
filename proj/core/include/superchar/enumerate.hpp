#pragma once

#include <vector>

#include "superchar/diagram.hpp"

namespace superchar {

/// All dominant weights whose diagram is supported on [lo, hi] (gl) or
/// [0, hi] (osp), enumerated through the valid diagram shapes.  Signed osp
/// variants are included.  Deterministic order.
std::vector<Weight> dominant_weights_in_window(const Algebra& g, int lo, int hi);

}  // namespace superchar
