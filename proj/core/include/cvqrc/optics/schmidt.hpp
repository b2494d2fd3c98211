#ifndef CVQRC_OPTICS_SCHMIDT_HPP
#define CVQRC_OPTICS_SCHMIDT_HPP

#include <cmath>
#include <cstddef>

#include <Eigen/Dense>

#include "cvqrc/optics/jsa.hpp"

namespace cvqrc::optics {

// r_1 such that exp(-2 r_1) corresponds to 0.45 dB of squeezing.
inline const double kDefaultSqueezingScale = 0.45 * std::log(10.0) / 20.0;

struct SchmidtDecomposition {
  SpectralGrid signal;
  SpectralGrid idler;
  // All singular values of the unit-norm JSA, descending; their squares sum to 1.
  Eigen::VectorXd spectrum;
  // Calibrated squeezing parameters of the kept modes, r(0) = r_scale.
  Eigen::VectorXd r;
  // Columns are h_k on the signal grid and g_k on the idler grid, each with
  // unit norm under the midpoint rule, so J ~ sum_k spectrum_k h_k g_k^T dl.
  Eigen::MatrixXcd modes_signal;
  Eigen::MatrixXcd modes_idler;
  // arg <h_k, g_k>: orientation of the squeezing ellipse of supermode k.
  // Zero when the signal and idler grids differ.
  Eigen::VectorXd squeezing_angle;

  std::size_t kept() const noexcept { return static_cast<std::size_t>(r.size()); }
};

// Number of singular values above tol * largest.
std::size_t numerical_rank(const Eigen::VectorXd& singular_values, double tol = 1e-12);

// SVD of the JSA truncated to `n_kept` supermodes. For every mode the entry
// of h_k with the largest magnitude is made real-positive, and g_k absorbs the
// conjugate phase. Throws DomainError if n_kept exceeds the numerical rank.
SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa, std::size_t n_kept,
                                       double r_scale = kDefaultSqueezingScale);

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_SCHMIDT_HPP
