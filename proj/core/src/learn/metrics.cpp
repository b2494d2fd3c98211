#include "cvqrc/learn/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "cvqrc/error.hpp"

namespace cvqrc::learn {

namespace {

void check_pair(Eigen::Index a, Eigen::Index b) {
  if (a == 0 || a != b) throw DimensionError("metric needs two non-empty sequences of equal length");
}

}  // namespace

double accuracy(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
  check_pair(pred.size(), target.size());
  Eigen::Index hits = 0;
  for (Eigen::Index k = 0; k < pred.size(); ++k) {
    if ((pred(k) > 0.5) == (target(k) > 0.5)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double capacity(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
  check_pair(pred.size(), target.size());
  const Eigen::ArrayXd x = pred.array() - pred.mean();
  const Eigen::ArrayXd y = target.array() - target.mean();
  const double sxx = x.square().sum();
  const double syy = y.square().sum();
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw DomainError("capacity is undefined for a constant sequence");
  }
  const double r2 = (x * y).sum() * (x * y).sum() / (sxx * syy);
  return std::clamp(r2, 0.0, 1.0);
}

double mse(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target) {
  if (pred.size() == 0 || pred.rows() != target.rows() || pred.cols() != target.cols()) {
    throw DimensionError("mse needs two non-empty matrices of equal shape");
  }
  return (pred - target).squaredNorm() / static_cast<double>(pred.size());
}

}  // namespace cvqrc::learn
