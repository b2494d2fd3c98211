#include "cvqrc/reservoir/kernel_quality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cvqrc::reservoir {

std::size_t kernel_quality(const Eigen::MatrixXd& observables, double eps) {
  const auto rows = observables.rows();
  if (rows < 2) return 0;
  std::vector<Eigen::Index> keep;
  Eigen::VectorXd mean = observables.colwise().mean().transpose();
  Eigen::VectorXd sd(observables.cols());
  for (Eigen::Index c = 0; c < observables.cols(); ++c) {
    sd(c) = std::sqrt((observables.col(c).array() - mean(c)).square().mean());
    const double scale = std::max(1.0, observables.col(c).cwiseAbs().maxCoeff());
    if (sd(c) > 1e-10 * scale) keep.push_back(c);
  }
  if (keep.empty()) return 0;
  Eigen::MatrixXd z(rows, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const auto c = keep[k];
    z.col(static_cast<Eigen::Index>(k)) = (observables.col(c).array() - mean(c)) / sd(c);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(z);
  const Eigen::VectorXd& s = svd.singularValues();
  return static_cast<std::size_t>((s.array() > eps).count());
}

}  // namespace cvqrc::reservoir
