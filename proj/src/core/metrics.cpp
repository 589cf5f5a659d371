#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace spsim {

namespace {
constexpr double kPeak = 65535.0; // 2^16 - 1
}

double max_psnr_db() { return 20.0 * std::log10(kPeak); }

QuantizedImage quantize(const ScalarImage& img) {
  QuantizedImage q;
  q.width = img.width;
  q.height = img.height;
  q.values.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    const double v = std::clamp(img.values[i], 0.0, 1.0);
    q.values[i] = static_cast<uint16_t>(std::llround(v * kPeak));
  }
  return q;
}

double mse(const QuantizedImage& a, const QuantizedImage& b) {
  require(a.width == b.width && a.height == b.height, ErrorCode::dim_mismatch,
          "mse: image dims differ");
  double sum = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    const double d = static_cast<double>(a.values[i]) - static_cast<double>(b.values[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.values.size());
}

double psnr(const QuantizedImage& test, const QuantizedImage& ref) {
  const double e = mse(test, ref);
  if (e >= 1.0) return 20.0 * std::log10(kPeak / std::sqrt(e));
  return max_psnr_db();
}

double psnr(const ScalarImage& test, const ScalarImage& ref) {
  return psnr(quantize(test), quantize(ref));
}

PsnrStats mean_psnr(std::span<const double> per_image_db) {
  require(!per_image_db.empty(), ErrorCode::invalid_argument, "mean_psnr: empty input");
  PsnrStats s;
  s.per_image_db.assign(per_image_db.begin(), per_image_db.end());
  double sum = 0.0;
  for (double v : per_image_db) sum += v;
  s.mean_db = sum / static_cast<double>(per_image_db.size());
  if (per_image_db.size() > 1) {
    double ss = 0.0;
    for (double v : per_image_db) ss += (v - s.mean_db) * (v - s.mean_db);
    s.sd_db = std::sqrt(ss / static_cast<double>(per_image_db.size() - 1));
  }
  return s;
}

} // namespace spsim
