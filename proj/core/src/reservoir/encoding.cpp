#include "cvqrc/reservoir/encoding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::reservoir {

void EncodingParams::validate() const {
  if (alpha.size() == 0) throw ConfigError("encoding needs at least one segment", "alpha");
  if (beta.size() != alpha.size()) {
    throw ConfigError("beta has " + std::to_string(beta.size()) + " entries, expected " +
                      std::to_string(alpha.size()), "beta");
  }
  if (mask.rows() != alpha.size()) {
    throw ConfigError("feedback mask has " + std::to_string(mask.rows()) + " rows, expected " +
                      std::to_string(alpha.size()), "mask");
  }
  if (v_pi2 && !(*v_pi2 > 0.0)) throw ConfigError("v_pi2 must be positive", "v_pi2");
  if (!alpha.allFinite() || !beta.allFinite() || !mask.allFinite()) {
    throw ConfigError("encoding parameters must be finite");
  }
}

double phase_from_voltage(double volts, double v_pi2, double offset) {
  return std::numbers::pi / 2.0 * volts / v_pi2 + offset;
}

Eigen::VectorXd encode_phases(std::span<const double> input, const Eigen::VectorXd& feedback,
                              const EncodingParams& params, std::size_t channel_offset) {
  const auto n = params.alpha.size();
  if (input.empty()) throw DimensionError("input vector is empty");
  if (feedback.size() != params.mask.cols()) {
    throw DimensionError("feedback vector has " + std::to_string(feedback.size()) +
                         " entries, mask expects " + std::to_string(params.mask.cols()));
  }
  Eigen::VectorXd x = params.beta;
  if (params.mask.cols() > 0) x += params.mask * feedback;
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) += params.alpha(i) * input[(static_cast<std::size_t>(i) + channel_offset) % input.size()];
  }
  if (params.v_pi2) {
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = phase_from_voltage(x(i), *params.v_pi2, params.phase_offset);
    }
  } else {
    x.array() += params.phase_offset;
  }
  return x;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> reachable_phase_box(const EncodingParams& params,
                                                                double input_lo, double input_hi) {
  const double s_max = std::max(std::abs(input_lo), std::abs(input_hi));
  Eigen::VectorXd reach = params.alpha.cwiseAbs() * s_max;
  if (params.mask.cols() > 0) reach += params.mask.cwiseAbs().rowwise().sum();
  Eigen::VectorXd lo = params.beta - reach;
  Eigen::VectorXd hi = params.beta + reach;
  const double scale = params.v_pi2 ? std::numbers::pi / 2.0 / *params.v_pi2 : 1.0;
  lo = (lo * scale).array() + params.phase_offset;
  hi = (hi * scale).array() + params.phase_offset;
  return {lo, hi};
}

}  // namespace cvqrc::reservoir
