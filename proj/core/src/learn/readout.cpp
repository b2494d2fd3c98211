#include "cvqrc/learn/readout.hpp"

#include <cmath>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::learn {

Eigen::MatrixXd LinearReadout::predict(const Eigen::MatrixXd& observables) const {
  if (observables.cols() != weights.rows()) {
    throw DimensionError("readout expects " + std::to_string(weights.rows()) +
                         " observables, got " + std::to_string(observables.cols()));
  }
  return (observables * weights).rowwise() + bias;
}

Eigen::RowVectorXd LinearReadout::predict_row(const Eigen::RowVectorXd& observables) const {
  return predict(observables);
}

LinearReadout train_readout(const Eigen::MatrixXd& observables, const Eigen::MatrixXd& targets,
                            double ridge) {
  const auto rows = observables.rows();
  const auto f = observables.cols();
  if (rows == 0 || rows != targets.rows()) {
    throw DimensionError("readout needs matching, non-empty observable and target rows (" +
                         std::to_string(rows) + " vs " + std::to_string(targets.rows()) + ")");
  }
  if (!(ridge >= 0.0)) throw DomainError("ridge parameter must be non-negative");

  const Eigen::Index extra = ridge > 0.0 ? f : 0;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(rows + extra, f + 1);
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(rows + extra, targets.cols());
  X.topLeftCorner(rows, f) = observables;
  X.col(f).head(rows).setOnes();
  Y.topRows(rows) = targets;
  if (extra > 0) X.bottomLeftCorner(f, f) = std::sqrt(ridge) * Eigen::MatrixXd::Identity(f, f);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  const Eigen::MatrixXd sol = svd.solve(Y);
  return {sol.topRows(f), sol.row(f)};
}

}  // namespace cvqrc::learn
