#ifndef CVQRC_LEARN_METRICS_HPP
#define CVQRC_LEARN_METRICS_HPP

#include <Eigen/Dense>

namespace cvqrc::learn {

// Fraction of positions where pred and target agree after thresholding
// both at 0.5. Throws DimensionError on empty or unequal inputs.
double accuracy(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

// Squared Pearson correlation. Throws DomainError if either sequence has
// zero variance.
double capacity(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

// Mean squared error.
double mse(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target);

}  // namespace cvqrc::learn

#endif  // CVQRC_LEARN_METRICS_HPP
