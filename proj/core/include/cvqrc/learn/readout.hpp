#ifndef CVQRC_LEARN_READOUT_HPP
#define CVQRC_LEARN_READOUT_HPP

#include <Eigen/Dense>

namespace cvqrc::learn {

// y = W^T o + b, one column of W per output channel.
struct LinearReadout {
  Eigen::MatrixXd weights;  // features x outputs
  Eigen::RowVectorXd bias;  // outputs

  Eigen::MatrixXd predict(const Eigen::MatrixXd& observables) const;
  Eigen::RowVectorXd predict_row(const Eigen::RowVectorXd& observables) const;
};

// Least squares on [O | 1] through an SVD whose singular values below
// 1e-10 of the largest are discarded (minimum-norm solution, never fails).
// ridge > 0 penalises the weights but not the bias.
LinearReadout train_readout(const Eigen::MatrixXd& observables, const Eigen::MatrixXd& targets,
                            double ridge = 0.0);

}  // namespace cvqrc::learn

#endif  // CVQRC_LEARN_READOUT_HPP
