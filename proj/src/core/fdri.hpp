#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "core/image.hpp"
#include "core/probe.hpp"

namespace spsim {

// Fourier-domain filter weights on the DFT frequency grid, row-major over
// (ky, kx); strictly positive and symmetric under frequency negation.
struct SpectralWeights {
  int width = 0;
  int height = 0;
  std::vector<double> w;
};

// w(w1,w2) = [(1-mu)^2 (sin^2(w1/2) + sin^2(w2/2)) + mu^2]^(-1/2), mu in (0,1]
SpectralWeights build_spectral_weights(int img_w, int img_h, double mu);

// G v for G = F^H diag(w) F, computed via FFT; the imaginary residue of the
// round trip is reported through max_imag_residue when requested.
std::vector<double> apply_spectral_operator(const SpectralWeights& weights,
                                            std::span<const double> v,
                                            double* max_imag_residue = nullptr);

struct ReconstructionMatrix {
  int img_width = 0;
  int img_height = 0;
  double mu = 0.0;
  double svd_rel_cutoff = 0.0;
  Eigen::MatrixXd entries; // N x m
};

// P = G pinv(M G) with the pseudoinverse truncated at svd_rel_cutoff times the
// largest singular value.
ReconstructionMatrix build_reconstruction_matrix(const MeasurementMatrix& M, double mu,
                                                 double svd_rel_cutoff);

// vec(img) = P y; no clipping (quantization clamps later).
ScalarImage reconstruct(const ReconstructionMatrix& P, std::span<const double> readings);

// Batched variant: one column of readings per image.
Eigen::MatrixXd reconstruct_batch(const ReconstructionMatrix& P, const Eigen::MatrixXd& readings);

} // namespace spsim
