#include "core/fdri.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fftw3.h>
#include <new>

#include "core/error.hpp"

namespace spsim {

SpectralWeights build_spectral_weights(int img_w, int img_h, double mu) {
  require(img_w > 0 && img_h > 0, ErrorCode::config, "spectral weights: dims must be positive");
  require(mu > 0.0 && mu <= 1.0, ErrorCode::config, "spectral weights: mu must be in (0,1]");
  SpectralWeights sw;
  sw.width = img_w;
  sw.height = img_h;
  sw.w.resize(static_cast<size_t>(img_w) * img_h);
  const double om = (1.0 - mu) * (1.0 - mu);
  for (int ky = 0; ky < img_h; ++ky) {
    const double sy = std::sin(M_PI * ky / img_h); // sin(w1/2), w1 = 2 pi ky / h
    for (int kx = 0; kx < img_w; ++kx) {
      const double sx = std::sin(M_PI * kx / img_w);
      sw.w[static_cast<size_t>(ky) * img_w + kx] = 1.0 / std::sqrt(om * (sy * sy + sx * sx) + mu * mu);
    }
  }
  return sw;
}

namespace {

// RAII wrapper around a pair of in-place 2-D FFTW plans. FFTW_ESTIMATE keeps
// planning deterministic, which the byte-identical rerun guarantee relies on.
class Fft2d {
public:
  Fft2d(int width, int height) : n_(static_cast<size_t>(width) * height) {
    buf_ = fftw_alloc_complex(n_);
    if (buf_ == nullptr) throw std::bad_alloc();
    fwd_ = fftw_plan_dft_2d(height, width, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_2d(height, width, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft2d() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  // out = Re(F^H diag(w) F in); returns the largest |imag| seen in the result
  double filter(std::span<const double> in, const std::vector<double>& w, double* out) {
    for (size_t i = 0; i < n_; ++i) {
      buf_[i][0] = in[i];
      buf_[i][1] = 0.0;
    }
    fftw_execute(fwd_);
    for (size_t i = 0; i < n_; ++i) {
      buf_[i][0] *= w[i];
      buf_[i][1] *= w[i];
    }
    fftw_execute(bwd_);
    const double scale = 1.0 / static_cast<double>(n_);
    double max_imag = 0.0;
    for (size_t i = 0; i < n_; ++i) {
      out[i] = buf_[i][0] * scale;
      max_imag = std::max(max_imag, std::fabs(buf_[i][1]) * scale);
    }
    return max_imag;
  }

private:
  size_t n_;
  fftw_complex* buf_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

} // namespace

std::vector<double> apply_spectral_operator(const SpectralWeights& weights,
                                            std::span<const double> v, double* max_imag_residue) {
  const size_t n = static_cast<size_t>(weights.width) * weights.height;
  require(v.size() == n, ErrorCode::dim_mismatch, "spectral operator: vector length mismatch");
  Fft2d fft(weights.width, weights.height);
  std::vector<double> out(n);
  const double residue = fft.filter(v, weights.w, out.data());
  if (max_imag_residue) *max_imag_residue = residue;
  return out;
}

ReconstructionMatrix build_reconstruction_matrix(const MeasurementMatrix& M, double mu,
                                                 double svd_rel_cutoff) {
  const Eigen::Index m = M.entries.rows();
  const Eigen::Index N = M.entries.cols();
  require(m > 0 && N > 0, ErrorCode::config, "fdri: empty measurement matrix");
  require(m <= N, ErrorCode::config, "fdri: more measurements than pixels");
  require(svd_rel_cutoff >= 0.0 && svd_rel_cutoff < 1.0, ErrorCode::config,
          "fdri: svd cutoff must be in [0,1)");
  const SpectralWeights sw = build_spectral_weights(M.img_width, M.img_height, mu);

  Fft2d fft(M.img_width, M.img_height);
  // A = M G, one filtered row at a time (G is symmetric, so G^T row = G row)
  Eigen::MatrixXd A(m, N);
  {
    Eigen::VectorXd row(N), filtered(N);
    for (Eigen::Index r = 0; r < m; ++r) {
      row = M.entries.row(r);
      fft.filter({row.data(), static_cast<size_t>(N)}, sw.w, filtered.data());
      A.row(r) = filtered;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index kept = 0;
  while (kept < sigma.size() && sigma(kept) > svd_rel_cutoff * sigma_max && sigma(kept) > 0.0)
    ++kept;
  require(kept > 0, ErrorCode::degenerate_measurement, "degenerate measurement");

  // pinv(A) = V_k diag(1/sigma_k) U_k^T
  Eigen::MatrixXd Uk = svd.matrixU().leftCols(kept);
  for (Eigen::Index c = 0; c < kept; ++c) Uk.col(c) /= sigma(c);
  Eigen::MatrixXd X = svd.matrixV().leftCols(kept) * Uk.transpose(); // N x m

  ReconstructionMatrix P;
  P.img_width = M.img_width;
  P.img_height = M.img_height;
  P.mu = mu;
  P.svd_rel_cutoff = svd_rel_cutoff;
  P.entries.resize(N, m);
  {
    Eigen::VectorXd col(N), filtered(N);
    for (Eigen::Index c = 0; c < m; ++c) {
      col = X.col(c);
      fft.filter({col.data(), static_cast<size_t>(N)}, sw.w, filtered.data());
      P.entries.col(c) = filtered;
    }
  }
  return P;
}

ScalarImage reconstruct(const ReconstructionMatrix& P, std::span<const double> readings) {
  require(static_cast<Eigen::Index>(readings.size()) == P.entries.cols(),
          ErrorCode::dim_mismatch, "reconstruct: reading count does not match matrix");
  Eigen::Map<const Eigen::VectorXd> y(readings.data(),
                                      static_cast<Eigen::Index>(readings.size()));
  Eigen::VectorXd v = P.entries * y;
  ScalarImage img(P.img_width, P.img_height);
  Eigen::Map<Eigen::VectorXd>(img.values.data(), v.size()) = v;
  return img;
}

Eigen::MatrixXd reconstruct_batch(const ReconstructionMatrix& P, const Eigen::MatrixXd& readings) {
  require(readings.rows() == P.entries.cols(), ErrorCode::dim_mismatch,
          "reconstruct_batch: reading count does not match matrix");
  return P.entries * readings;
}

} // namespace spsim
