#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace spsim {

// All stochastic code in the project draws through this wrapper. The raw
// mt19937_64 stream is pinned by the standard and the variate transforms are
// spelled out here, so a given seed reproduces the same doubles everywhere.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; second variate cached
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stable sub-stream seeds: mix the base seed with a stream index.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
  return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Hash of a parameter vector quantized to a fixed grid; used to derive
// deterministic position seeds from continuous MCMC states.
inline uint64_t hash_quantized(std::span<const double> params, uint64_t base,
                               double quantum = 1e-9) {
  uint64_t h = splitmix64(base);
  for (double p : params) {
    const auto q = static_cast<int64_t>(std::llround(p / quantum));
    h = splitmix64(h ^ static_cast<uint64_t>(q));
  }
  return h;
}

} // namespace spsim
