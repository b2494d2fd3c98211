#include "cvqrc/reservoir/noise.hpp"

#include <cmath>
#include <random>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::reservoir {

NoiseModel NoiseModel::none(std::size_t size) {
  return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size))};
}

NoiseModel NoiseModel::uniform(std::size_t size, double stddev) {
  return {Eigen::VectorXd::Constant(static_cast<Eigen::Index>(size), stddev)};
}

void NoiseModel::validate() const {
  for (Eigen::Index m = 0; m < stddev.size(); ++m) {
    if (!(stddev(m) >= 0.0) || !std::isfinite(stddev(m))) {
      throw ConfigError("noise standard deviation " + std::to_string(m) +
                        " must be finite and non-negative", "noise");
    }
  }
}

Eigen::VectorXd NoiseModel::sample(std::size_t size, Rng& rng) const {
  const auto n = static_cast<Eigen::Index>(size);
  if (stddev.size() != 1 && stddev.size() != n) {
    throw DimensionError("noise model has " + std::to_string(stddev.size()) +
                         " entries for " + std::to_string(size) + " observables");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd out(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    out(m) = gauss(rng) * stddev(stddev.size() == 1 ? 0 : m);
  }
  return out;
}

NoiseModel fit_noise(const std::vector<Eigen::MatrixXd>& repetitions,
                     const std::optional<Eigen::MatrixXd>& model_mean) {
  if (repetitions.empty()) throw DimensionError("no phase points to fit noise on");
  const auto cols = repetitions.front().cols();
  if (model_mean && (model_mean->rows() != static_cast<Eigen::Index>(repetitions.size()) ||
                     model_mean->cols() != cols)) {
    throw DimensionError("model mean must have one row per phase point");
  }
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(cols);
  double dof = 0.0;
  for (std::size_t p = 0; p < repetitions.size(); ++p) {
    const auto& reps = repetitions[p];
    if (reps.rows() < 2) {
      throw DimensionError("phase point " + std::to_string(p) + " has " +
                           std::to_string(reps.rows()) + " repetitions; at least 2 are needed");
    }
    if (reps.cols() != cols) throw DimensionError("inconsistent observable count across points");
    const Eigen::RowVectorXd centre = model_mean ? Eigen::RowVectorXd(model_mean->row(static_cast<Eigen::Index>(p)))
                                                 : Eigen::RowVectorXd(reps.colwise().mean());
    sum_sq += (reps.rowwise() - centre).array().square().colwise().sum().matrix().transpose();
    dof += static_cast<double>(reps.rows()) - (model_mean ? 0.0 : 1.0);
  }
  return {(sum_sq / dof).cwiseSqrt()};
}

}  // namespace cvqrc::reservoir
