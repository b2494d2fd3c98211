#ifndef CVQRC_RESERVOIR_NOISE_HPP
#define CVQRC_RESERVOIR_NOISE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cvqrc/rng.hpp"

namespace cvqrc::reservoir {

// Additive, independent Gaussian noise on each observable at each step.
struct NoiseModel {
  Eigen::VectorXd stddev;

  static NoiseModel none(std::size_t size);
  static NoiseModel uniform(std::size_t size, double stddev);

  bool silent() const noexcept { return stddev.size() == 0 || stddev.maxCoeff() == 0.0; }
  // Throws ConfigError on a negative or non-finite entry.
  void validate() const;
  // A model with a single entry applies to every observable.
  Eigen::VectorXd sample(std::size_t size, Rng& rng) const;
};

// Least-squares estimate of per-observable noise from repeated measurements.
// `repetitions[p]` holds the repeated observable vectors (rows) recorded at
// phase point p. With `model_mean` (one row per phase point) the residuals
// are taken about the model prediction and the variance estimate is their
// mean square; otherwise the per-point sample means are fitted as well and
// the pooled within-point variance is returned. Throws DimensionError unless
// every point has at least two repetitions.
NoiseModel fit_noise(const std::vector<Eigen::MatrixXd>& repetitions,
                     const std::optional<Eigen::MatrixXd>& model_mean = std::nullopt);

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_NOISE_HPP
