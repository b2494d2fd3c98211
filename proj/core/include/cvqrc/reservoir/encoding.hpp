#ifndef CVQRC_RESERVOIR_ENCODING_HPP
#define CVQRC_RESERVOIR_ENCODING_HPP

#include <cstddef>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace cvqrc::reservoir {

// Affine map from the current input and the previous observables to the N
// pump-segment phases:
//   x_i = alpha_i * s[(i + offset) mod dim] + beta_i + sum_m mask_im * O_m.
// With a voltage scale, x is a drive voltage and delta = pi/2 * x / v_pi2
// + phase_offset; otherwise delta = x + phase_offset.
struct EncodingParams {
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
  Eigen::MatrixXd mask;  // N x feedback length
  std::optional<double> v_pi2;
  double phase_offset = 0.0;

  std::size_t segments() const noexcept { return static_cast<std::size_t>(alpha.size()); }
  std::size_t feedback_size() const noexcept { return static_cast<std::size_t>(mask.cols()); }

  // Throws ConfigError on inconsistent sizes or a non-positive voltage scale.
  void validate() const;
};

// delta = pi/2 * volts / v_pi2 + offset.
double phase_from_voltage(double volts, double v_pi2, double offset = 0.0);

// Pump phases for one step. `channel_offset` shifts the cyclic assignment of
// input components to segments (used when segments of several reservoirs
// share one input vector). Throws DimensionError on size mismatch.
Eigen::VectorXd encode_phases(std::span<const double> input, const Eigen::VectorXd& feedback,
                              const EncodingParams& params, std::size_t channel_offset = 0);

// Per-segment phase interval [lo, hi] containing every phase reachable with
// inputs in [input_lo, input_hi] and feedback values in [0, 1], widened
// symmetrically around beta.
std::pair<Eigen::VectorXd, Eigen::VectorXd> reachable_phase_box(const EncodingParams& params,
                                                                double input_lo, double input_hi);

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_ENCODING_HPP
