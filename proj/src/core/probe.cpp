#include "core/probe.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace spsim {

std::vector<SamplePoint> grid_positions(int grid_w, int grid_h, int img_w, int img_h) {
  require(grid_w > 0 && grid_h > 0, ErrorCode::config, "grid dims must be positive");
  require(grid_w <= img_w && grid_h <= img_h, ErrorCode::config,
          "grid dims must not exceed image dims");
  std::vector<SamplePoint> points;
  points.reserve(static_cast<size_t>(grid_w) * grid_h);
  for (int i = 0; i < grid_h; ++i)
    for (int j = 0; j < grid_w; ++j)
      points.push_back({(j + 0.5) * static_cast<double>(img_w) / grid_w,
                        (i + 0.5) * static_cast<double>(img_h) / grid_h});
  return points;
}

namespace {

std::vector<WeightEntry> rasterize_square(double cx, double cy, double side, int img_w,
                                          int img_h) {
  const double half = side / 2.0;
  const double rx0 = cx - half, rx1 = cx + half;
  const double ry0 = cy - half, ry1 = cy + half;
  const int x0 = std::max(0, static_cast<int>(std::floor(rx0)));
  const int x1 = std::min(img_w - 1, static_cast<int>(std::ceil(rx1)) - 1);
  const int y0 = std::max(0, static_cast<int>(std::floor(ry0)));
  const int y1 = std::min(img_h - 1, static_cast<int>(std::ceil(ry1)) - 1);
  std::vector<WeightEntry> row;
  for (int y = y0; y <= y1; ++y) {
    const double hy = std::min(ry1, static_cast<double>(y + 1)) - std::max(ry0, static_cast<double>(y));
    if (hy <= 0.0) continue;
    for (int x = x0; x <= x1; ++x) {
      const double hx = std::min(rx1, static_cast<double>(x + 1)) - std::max(rx0, static_cast<double>(x));
      if (hx <= 0.0) continue;
      row.push_back({y * img_w + x, hx * hy});
    }
  }
  return row;
}

std::vector<WeightEntry> rasterize_circle(double cx, double cy, double radius, int img_w,
                                          int img_h, int ss) {
  const double r2 = radius * radius;
  const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
  const int x1 = std::min(img_w - 1, static_cast<int>(std::ceil(cx + radius)) - 1);
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
  const int y1 = std::min(img_h - 1, static_cast<int>(std::ceil(cy + radius)) - 1);
  std::vector<WeightEntry> row;
  const double inv_ss = 1.0 / ss;
  for (int y = y0; y <= y1; ++y) {
    // nearest/farthest distance from the disk center to the pixel square,
    // per axis
    const double ny = std::max({static_cast<double>(y) - cy, 0.0, cy - (y + 1.0)});
    const double fy = std::max(cy - y, (y + 1.0) - cy);
    for (int x = x0; x <= x1; ++x) {
      const double nx = std::max({static_cast<double>(x) - cx, 0.0, cx - (x + 1.0)});
      const double fx = std::max(cx - x, (x + 1.0) - cx);
      const double near2 = nx * nx + ny * ny;
      if (near2 > r2) continue;
      const double far2 = fx * fx + fy * fy;
      double weight;
      if (far2 <= r2) {
        weight = 1.0; // pixel fully inside; identical to an all-hit supersample
      } else {
        int hits = 0;
        for (int b = 0; b < ss; ++b) {
          const double py = y + (b + 0.5) * inv_ss;
          const double dy = py - cy;
          for (int a = 0; a < ss; ++a) {
            const double px = x + (a + 0.5) * inv_ss;
            const double dx = px - cx;
            if (dx * dx + dy * dy <= r2) ++hits;
          }
        }
        if (hits == 0) continue;
        weight = static_cast<double>(hits) * inv_ss * inv_ss;
      }
      row.push_back({y * img_w + x, weight});
    }
  }
  return row;
}

} // namespace

std::vector<WeightEntry> rasterize(const Probe& probe, SamplePoint center, int img_w, int img_h,
                                   int supersampling) {
  require(img_w > 0 && img_h > 0, ErrorCode::config, "rasterize: image dims must be positive");
  require(supersampling >= 1, ErrorCode::config, "rasterize: supersampling must be >= 1");
  std::vector<WeightEntry> row;
  switch (probe.shape) {
    case ProbeShape::square:
      require(probe.size > 0.0, ErrorCode::config, "square probe needs positive side");
      row = rasterize_square(center.x, center.y, probe.size, img_w, img_h);
      break;
    case ProbeShape::circle:
      require(probe.size > 0.0, ErrorCode::config, "circle probe needs positive diameter");
      row = rasterize_circle(center.x, center.y, probe.size / 2.0, img_w, img_h, supersampling);
      break;
    case ProbeShape::point: {
      const int x = static_cast<int>(std::floor(center.x));
      const int y = static_cast<int>(std::floor(center.y));
      if (x >= 0 && x < img_w && y >= 0 && y < img_h) row.push_back({y * img_w + x, 1.0});
      break;
    }
  }
  require(!row.empty(), ErrorCode::empty_probe, "empty probe row");
  return row;
}

namespace {

template <typename ProbeAt>
MeasurementMatrix build_matrix(size_t m, ProbeAt&& probe_at, int img_w, int img_h, int ss) {
  require(m > 0, ErrorCode::config, "measurement matrix needs at least one sample point");
  MeasurementMatrix M;
  M.img_width = img_w;
  M.img_height = img_h;
  M.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                    static_cast<Eigen::Index>(img_w) * img_h);
  for (size_t r = 0; r < m; ++r) {
    const auto& [point, probe] = probe_at(r);
    for (const auto& e : rasterize(probe, point, img_w, img_h, ss))
      M.entries(static_cast<Eigen::Index>(r), e.index) = e.weight;
  }
  return M;
}

} // namespace

MeasurementMatrix build_measurement_matrix(std::span<const SamplePoint> points,
                                           const Probe& probe, int img_w, int img_h,
                                           int supersampling) {
  return build_matrix(
      points.size(),
      [&](size_t r) { return std::pair<SamplePoint, Probe>(points[r], probe); }, img_w, img_h,
      supersampling);
}

MeasurementMatrix build_measurement_matrix(
    std::span<const std::pair<SamplePoint, Probe>> placed_probes, int img_w, int img_h,
    int supersampling) {
  return build_matrix(
      placed_probes.size(), [&](size_t r) -> const std::pair<SamplePoint, Probe>& {
        return placed_probes[r];
      }, img_w, img_h, supersampling);
}

Eigen::VectorXd measure(const ScalarImage& img, const MeasurementMatrix& M) {
  require(img.width == M.img_width && img.height == M.img_height, ErrorCode::dim_mismatch,
          "measure: image dims do not match measurement matrix");
  Eigen::Map<const Eigen::VectorXd> v(img.values.data(),
                                      static_cast<Eigen::Index>(img.values.size()));
  return M.entries * v;
}

} // namespace spsim
