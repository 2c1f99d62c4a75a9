#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace vbe {

using Observation = std::vector<double>;

/// Axis-aligned box bounding an observation space.
struct Box {
  std::vector<double> low;
  std::vector<double> high;

  std::size_t dim() const { return low.size(); }

  bool contains(std::span<const double> x) const {
    if (x.size() != low.size()) return false;
    for (std::size_t d = 0; d < x.size(); ++d) {
      if (x[d] < low[d] || x[d] > high[d]) return false;
    }
    return true;
  }

  double clip(std::size_t d, double v) const { return std::clamp(v, low[d], high[d]); }
};

}  // namespace vbe
