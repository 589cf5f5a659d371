#include "core/deadleaves.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace spsim {

void validate(const DeadLeavesConfig& cfg) {
  require(cfg.width > 0 && cfg.height > 0, ErrorCode::config, "dead leaves: dims must be positive");
  require(cfg.r_min > 0.0 && cfg.r_min < cfg.r_max, ErrorCode::config,
          "dead leaves: need 0 < r_min < r_max");
  require(cfg.power_exponent > 1.0, ErrorCode::config, "dead leaves: power exponent must be > 1");
  require(cfg.n_images > 0, ErrorCode::config, "dead leaves: n_images must be positive");
}

double radius_cdf(double r, const DeadLeavesConfig& cfg) {
  if (r <= cfg.r_min) return 0.0;
  if (r >= cfg.r_max) return 1.0;
  const double p = 1.0 - cfg.power_exponent; // negative
  const double a = std::pow(cfg.r_min, p);
  const double b = std::pow(cfg.r_max, p);
  return (a - std::pow(r, p)) / (a - b);
}

double sample_radius(double u, const DeadLeavesConfig& cfg) {
  validate(cfg);
  require(u >= 0.0 && u <= 1.0, ErrorCode::invalid_argument, "radius variate must be in [0,1]");
  const double p = 1.0 - cfg.power_exponent;
  const double a = std::pow(cfg.r_min, p);
  const double b = std::pow(cfg.r_max, p);
  const double r = std::pow(a - u * (a - b), 1.0 / p);
  return std::clamp(r, cfg.r_min, cfg.r_max);
}

ScalarImage generate_image(const DeadLeavesConfig& cfg, Rng& rng,
                           std::vector<double>* radius_trace) {
  validate(cfg);
  const int w = cfg.width;
  const int h = cfg.height;
  ScalarImage img(w, h);
  std::vector<char> painted(img.size(), 0);
  size_t uncovered = img.size();

  constexpr size_t kMaxDisks = 1000000;
  size_t disks = 0;
  while (uncovered > 0) {
    require(disks < kMaxDisks, ErrorCode::config, "dead leaves: coverage not reached within disk cap");
    ++disks;
    const double r = sample_radius(rng.uniform01(), cfg);
    const double cx = rng.uniform(-cfg.r_max, w + cfg.r_max);
    const double cy = rng.uniform(-cfg.r_max, h + cfg.r_max);
    const double gray = rng.uniform01();
    if (radius_trace) radius_trace->push_back(r);

    // pixel (y,x) belongs to the disk iff its center (x+0.5, y+0.5) is inside
    const int x0 = std::max(0, static_cast<int>(std::ceil(cx - r - 0.5)));
    const int x1 = std::min(w - 1, static_cast<int>(std::floor(cx + r - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::ceil(cy - r - 0.5)));
    const int y1 = std::min(h - 1, static_cast<int>(std::floor(cy + r - 0.5)));
    const double r2 = r * r;
    for (int y = y0; y <= y1; ++y) {
      const double dy = cy - (y + 0.5);
      for (int x = x0; x <= x1; ++x) {
        const double dx = cx - (x + 0.5);
        if (dx * dx + dy * dy > r2) continue;
        const size_t idx = static_cast<size_t>(y) * w + x;
        img.values[idx] = gray;
        if (!painted[idx]) {
          painted[idx] = 1;
          --uncovered;
        }
      }
    }
  }
  return img;
}

uint64_t dataset_image_seed(const DeadLeavesConfig& cfg, int index) {
  return derive_seed(cfg.seed, static_cast<uint64_t>(index));
}

std::vector<ScalarImage> generate_dataset(const DeadLeavesConfig& cfg) {
  validate(cfg);
  std::vector<ScalarImage> images;
  images.reserve(static_cast<size_t>(cfg.n_images));
  for (int i = 0; i < cfg.n_images; ++i) {
    Rng rng(dataset_image_seed(cfg, i));
    images.push_back(generate_image(cfg, rng));
  }
  return images;
}

} // namespace spsim
