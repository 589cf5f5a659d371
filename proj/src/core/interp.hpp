#pragma once

#include "core/image.hpp"

namespace spsim {

enum class InterpMethod { nearest, bilinear, bicubic, lanczos };

// Exact fractional-coverage box filter; each output pixel is the area-weighted
// mean of the input pixels under its footprint (staring-array simulation).
ScalarImage decimate_average(const ScalarImage& img, int out_w, int out_h);

// Separable resampling with pixel-center alignment and clamped source
// coordinates. Lanczos taps are renormalized to sum to one per phase.
ScalarImage upscale(const ScalarImage& img, int out_w, int out_h, InterpMethod method,
                    int lanczos_lobes = 4);

} // namespace spsim
