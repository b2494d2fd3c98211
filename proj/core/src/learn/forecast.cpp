#include "cvqrc/learn/forecast.hpp"

#include <string>
#include <vector>

#include "cvqrc/error.hpp"
#include "cvqrc/learn/metrics.hpp"

namespace cvqrc::learn {

Eigen::MatrixXd closed_loop_forecast(reservoir::Ensemble& ensemble, reservoir::ReservoirState state,
                                     const LinearReadout& readout, std::size_t horizon) {
  if (horizon == 0) {
    throw DomainError("a zero-length forecast has no capacity");
  }
  const auto channels = readout.weights.cols();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(horizon), channels);
  Eigen::RowVectorXd y = readout.predict_row(state.previous.transpose());
  std::vector<double> input(static_cast<std::size_t>(channels));
  for (std::size_t h = 0; h < horizon; ++h) {
    if (!y.allFinite() || y.cwiseAbs().maxCoeff() > 10.0) {
      throw DivergenceError("closed-loop forecast diverged at step " + std::to_string(h));
    }
    out.row(static_cast<Eigen::Index>(h)) = y;
    if (h + 1 == horizon) break;
    for (Eigen::Index c = 0; c < channels; ++c) input[static_cast<std::size_t>(c)] = y(c);
    const Eigen::VectorXd o = ensemble.step(input, state);
    y = readout.predict_row(o.transpose());
  }
  return out;
}

Eigen::VectorXd channel_capacity(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& truth) {
  if (pred.rows() != truth.rows() || pred.cols() != truth.cols()) {
    throw DimensionError("forecast and truth differ in shape");
  }
  Eigen::VectorXd out(pred.cols());
  for (Eigen::Index c = 0; c < pred.cols(); ++c) out(c) = capacity(pred.col(c), truth.col(c));
  return out;
}

}  // namespace cvqrc::learn
