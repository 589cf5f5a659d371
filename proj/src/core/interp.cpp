#include "core/interp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace spsim {

namespace {

// One axis of the box decimation: weights of input cells overlapping the
// output cell [o*scale, (o+1)*scale).
struct AxisTap {
  int index;
  double weight;
};

std::vector<std::vector<AxisTap>> box_taps(int in_n, int out_n) {
  const double scale = static_cast<double>(in_n) / out_n;
  std::vector<std::vector<AxisTap>> taps(out_n);
  for (int o = 0; o < out_n; ++o) {
    const double lo = o * scale;
    const double hi = (o + 1) * scale;
    const int j0 = std::max(0, static_cast<int>(std::floor(lo)));
    const int j1 = std::min(in_n - 1, static_cast<int>(std::ceil(hi)) - 1);
    for (int j = j0; j <= j1; ++j) {
      const double overlap = std::min(hi, static_cast<double>(j + 1)) - std::max(lo, static_cast<double>(j));
      if (overlap > 0.0) taps[o].push_back({j, overlap});
    }
  }
  return taps;
}

double cubic_keys(double t) {
  // Keys kernel, a = -0.5
  constexpr double a = -0.5;
  t = std::fabs(t);
  if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return (((t - 5.0) * t + 8.0) * t - 4.0) * a;
  return 0.0;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

double lanczos_kernel(double t, int lobes) {
  t = std::fabs(t);
  if (t >= lobes) return 0.0;
  return sinc(t) * sinc(t / lobes);
}

// Resampling taps for one output coordinate along one axis.
std::vector<AxisTap> upscale_taps(double src, int in_n, InterpMethod method, int lobes) {
  std::vector<AxisTap> taps;
  switch (method) {
    case InterpMethod::nearest: {
      const int j = std::clamp(static_cast<int>(std::floor(src + 0.5)), 0, in_n - 1);
      taps.push_back({j, 1.0});
      break;
    }
    case InterpMethod::bilinear: {
      const int j0 = static_cast<int>(std::floor(src));
      const double f = src - j0;
      taps.push_back({std::clamp(j0, 0, in_n - 1), 1.0 - f});
      taps.push_back({std::clamp(j0 + 1, 0, in_n - 1), f});
      break;
    }
    case InterpMethod::bicubic: {
      const int j0 = static_cast<int>(std::floor(src));
      for (int j = j0 - 1; j <= j0 + 2; ++j)
        taps.push_back({std::clamp(j, 0, in_n - 1), cubic_keys(src - j)});
      break;
    }
    case InterpMethod::lanczos: {
      const int j0 = static_cast<int>(std::floor(src));
      double sum = 0.0;
      for (int j = j0 - lobes + 1; j <= j0 + lobes; ++j) {
        const double w = lanczos_kernel(src - j, lobes);
        taps.push_back({std::clamp(j, 0, in_n - 1), w});
        sum += w;
      }
      for (auto& t : taps) t.weight /= sum;
      break;
    }
  }
  return taps;
}

std::vector<std::vector<AxisTap>> upscale_axis_taps(int in_n, int out_n, InterpMethod method,
                                                    int lobes) {
  std::vector<std::vector<AxisTap>> taps(out_n);
  for (int o = 0; o < out_n; ++o) {
    const double src = (o + 0.5) * static_cast<double>(in_n) / out_n - 0.5;
    taps[o] = upscale_taps(src, in_n, method, lobes);
  }
  return taps;
}

ScalarImage apply_separable(const ScalarImage& img,
                            const std::vector<std::vector<AxisTap>>& x_taps,
                            const std::vector<std::vector<AxisTap>>& y_taps,
                            double normalize = 1.0) {
  const int out_w = static_cast<int>(x_taps.size());
  const int out_h = static_cast<int>(y_taps.size());
  ScalarImage mid(out_w, img.height);
  for (int y = 0; y < img.height; ++y)
    for (int ox = 0; ox < out_w; ++ox) {
      double acc = 0.0;
      for (const auto& t : x_taps[ox]) acc += t.weight * img.at(y, t.index);
      mid.at(y, ox) = acc;
    }
  ScalarImage out(out_w, out_h);
  for (int oy = 0; oy < out_h; ++oy)
    for (int ox = 0; ox < out_w; ++ox) {
      double acc = 0.0;
      for (const auto& t : y_taps[oy]) acc += t.weight * mid.at(t.index, ox);
      out.at(oy, ox) = acc * normalize;
    }
  return out;
}

} // namespace

ScalarImage decimate_average(const ScalarImage& img, int out_w, int out_h) {
  require(out_w > 0 && out_h > 0, ErrorCode::config, "decimate: output dims must be positive");
  require(out_w <= img.width && out_h <= img.height, ErrorCode::config,
          "decimate: output dims must not exceed input dims");
  const double cell_area =
      (static_cast<double>(img.width) / out_w) * (static_cast<double>(img.height) / out_h);
  return apply_separable(img, box_taps(img.width, out_w), box_taps(img.height, out_h),
                         1.0 / cell_area);
}

ScalarImage upscale(const ScalarImage& img, int out_w, int out_h, InterpMethod method,
                    int lanczos_lobes) {
  require(out_w >= img.width && out_h >= img.height, ErrorCode::config,
          "upscale: output dims must be at least input dims");
  require(lanczos_lobes >= 1, ErrorCode::config, "upscale: lanczos lobes must be >= 1");
  return apply_separable(img, upscale_axis_taps(img.width, out_w, method, lanczos_lobes),
                         upscale_axis_taps(img.height, out_h, method, lanczos_lobes));
}

} // namespace spsim
