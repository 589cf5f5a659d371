#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/image.hpp"

namespace spsim {

struct QuantizedImage {
  int width = 0;
  int height = 0;
  std::vector<uint16_t> values;
};

// Highest representable PSNR: 20*log10(2^16 - 1), the cap used when MSE < 1.
double max_psnr_db();

// clamp to [0,1], scale to 16 bit, round half away from zero
QuantizedImage quantize(const ScalarImage& img);

double mse(const QuantizedImage& a, const QuantizedImage& b);

// Piecewise 16-bit PSNR: capped at max_psnr_db() when MSE < 1.
double psnr(const QuantizedImage& test, const QuantizedImage& ref);

// Convenience: quantize both sides, then score.
double psnr(const ScalarImage& test, const ScalarImage& ref);

struct PsnrStats {
  double mean_db = 0.0;
  double sd_db = 0.0; // sample sd, 0 for n=1
  std::vector<double> per_image_db;
};

PsnrStats mean_psnr(std::span<const double> per_image_db);

} // namespace spsim
