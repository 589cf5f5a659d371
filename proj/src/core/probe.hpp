#pragma once

#include <Eigen/Core>
#include <span>
#include <utility>
#include <vector>

#include "core/image.hpp"

namespace spsim {

enum class ProbeShape { square, circle, point };

// size is the side length for squares, the diameter for circles, and is
// ignored for the degenerate point probe.
struct Probe {
  ProbeShape shape = ProbeShape::square;
  double size = 1.0;
};

// Continuous probe-center coordinates; pixel (i,j) occupies [j,j+1)x[i,i+1).
struct SamplePoint {
  double x = 0.0;
  double y = 0.0;
};

struct WeightEntry {
  int index;     // flattened row-major pixel index
  double weight; // pixel-coverage fraction, in [0,1]
};

struct MeasurementMatrix {
  int img_width = 0;
  int img_height = 0;
  Eigen::MatrixXd entries; // m x N, N = img_width*img_height

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

// Cell-center positions of a sampling grid mapped onto the image, row-major.
std::vector<SamplePoint> grid_positions(int grid_w, int grid_h, int img_w, int img_h);

// One measurement row: per-pixel intersection area with the probe footprint.
// Squares use the closed-form rectangle overlap; circles are supersampled
// (supersampling x supersampling points per pixel, fully inside/outside pixels
// classified analytically). Off-image coverage is clipped away.
std::vector<WeightEntry> rasterize(const Probe& probe, SamplePoint center, int img_w, int img_h,
                                   int supersampling = 16);

MeasurementMatrix build_measurement_matrix(std::span<const SamplePoint> points,
                                           const Probe& probe, int img_w, int img_h,
                                           int supersampling = 16);

// Heterogeneous variant used by multi-level sampling.
MeasurementMatrix build_measurement_matrix(
    std::span<const std::pair<SamplePoint, Probe>> placed_probes, int img_w, int img_h,
    int supersampling = 16);

// Detector readings y = M * vec(img).
Eigen::VectorXd measure(const ScalarImage& img, const MeasurementMatrix& M);

} // namespace spsim
