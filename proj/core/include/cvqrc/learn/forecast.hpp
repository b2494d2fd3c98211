#ifndef CVQRC_LEARN_FORECAST_HPP
#define CVQRC_LEARN_FORECAST_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "cvqrc/learn/readout.hpp"
#include "cvqrc/reservoir/ensemble.hpp"

namespace cvqrc::learn {

// Autonomous rollout after teacher forcing. `state` is the reservoir state
// after the last teacher-forced step; its observables give the first
// prediction, and every prediction is fed back as the next input. Returns
// `horizon` rows of predictions. Throws DomainError for a zero horizon and
// DivergenceError once a prediction exceeds 10 in magnitude.
Eigen::MatrixXd closed_loop_forecast(reservoir::Ensemble& ensemble, reservoir::ReservoirState state,
                                     const LinearReadout& readout, std::size_t horizon);

// Capacity of each channel of a forecast against the truth.
Eigen::VectorXd channel_capacity(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& truth);

}  // namespace cvqrc::learn

#endif  // CVQRC_LEARN_FORECAST_HPP
