#pragma once

#include <cstddef>
#include <vector>

#include "core/error.hpp"

namespace spsim {

// 2-D real-valued raster, row-major.
struct ScalarImage {
  int width = 0;
  int height = 0;
  std::vector<double> values; // size width*height

  ScalarImage() = default;
  ScalarImage(int w, int h, double fill = 0.0)
      : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {
    require(w > 0 && h > 0, ErrorCode::invalid_argument, "image dims must be positive");
  }

  size_t size() const { return values.size(); }
  double& at(int y, int x) { return values[static_cast<size_t>(y) * width + x]; }
  double at(int y, int x) const { return values[static_cast<size_t>(y) * width + x]; }
  bool same_dims(const ScalarImage& o) const { return width == o.width && height == o.height; }
};

} // namespace spsim
