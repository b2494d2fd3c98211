#ifndef CVQRC_LEARN_DOUBLE_SCROLL_HPP
#define CVQRC_LEARN_DOUBLE_SCROLL_HPP

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace cvqrc::learn {

// Double-scroll circuit: two capacitor voltages V1, V2 and the inductor
// current I, coupled through a pair of anti-parallel diodes.
struct DoubleScrollParams {
  double r1 = 1.2;
  double r2 = 3.44;
  double r4 = 0.193;
  double beta = 11.6;
  double ir = 2.25e-5;
};

using DoubleScrollState = Eigen::Vector3d;  // (V1, V2, I)

DoubleScrollState double_scroll_rhs(const DoubleScrollState& x, const DoubleScrollParams& p = {});

// Classical RK4 with step `dt`, sampled every `sample_dt`. Returns one row
// per sample (the initial state is not included). Throws ConfigError if dt
// exceeds 0.05 or does not divide sample_dt, and DivergenceError once any
// component exceeds 1e3 in magnitude.
Eigen::MatrixXd double_scroll_integrate(const DoubleScrollState& initial, std::size_t samples,
                                        double sample_dt = 1.0, double dt = 0.01,
                                        const DoubleScrollParams& p = {});

// `length` consecutive samples of the attractor: integrate `burn_in`
// samples from (0.1, 0.2, 0.3), then skip a seed-dependent offset drawn
// from [0, max_offset).
Eigen::MatrixXd double_scroll_series(std::size_t length, std::uint64_t seed,
                                     std::size_t burn_in = 500, std::size_t max_offset = 500);

// Per-channel affine map of the fitted rows onto [-1, 1].
struct ChannelScaler {
  Eigen::RowVectorXd lo;
  Eigen::RowVectorXd hi;

  static ChannelScaler fit(const Eigen::MatrixXd& rows);
  Eigen::MatrixXd apply(const Eigen::MatrixXd& rows) const;
  Eigen::MatrixXd invert(const Eigen::MatrixXd& scaled) const;
};

}  // namespace cvqrc::learn

#endif  // CVQRC_LEARN_DOUBLE_SCROLL_HPP
