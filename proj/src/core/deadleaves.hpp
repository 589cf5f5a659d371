#pragma once

#include <cstdint>
#include <vector>

#include "core/image.hpp"
#include "core/rng.hpp"

namespace spsim {

struct DeadLeavesConfig {
  int width = 64;
  int height = 64;
  double power_exponent = 3.0; // k in f(r) ~ r^-k
  double r_min = 0.7;          // pixels
  double r_max = 64.0;         // pixels
  int n_images = 200;
  uint64_t seed = 0;
};

void validate(const DeadLeavesConfig& cfg);

// Analytic CDF of the truncated power-law radius distribution.
double radius_cdf(double r, const DeadLeavesConfig& cfg);

// Inverse-CDF draw; u in [0,1] maps onto [r_min, r_max].
double sample_radius(double u, const DeadLeavesConfig& cfg);

// Occluding disks painted on top of each other until every pixel is covered.
// Disk centers are uniform over the image rectangle padded by r_max on each
// side; gray levels are uniform on [0,1]. When radius_trace is given, every
// drawn radius is appended (disks that miss the image included).
ScalarImage generate_image(const DeadLeavesConfig& cfg, Rng& rng,
                           std::vector<double>* radius_trace = nullptr);

// n_images independent images; per-image seeds derived from cfg.seed.
std::vector<ScalarImage> generate_dataset(const DeadLeavesConfig& cfg);

uint64_t dataset_image_seed(const DeadLeavesConfig& cfg, int index);

} // namespace spsim
