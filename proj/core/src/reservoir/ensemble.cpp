#include "cvqrc/reservoir/ensemble.hpp"

#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::reservoir {

Ensemble::Ensemble(std::vector<ReservoirUnit> units, ObservableSelection selection,
                   NoiseModel noise, std::vector<FeedbackSource> feedback, std::uint64_t seed)
    : units_(std::move(units)),
      selection_(std::move(selection)),
      noise_(std::move(noise)),
      feedback_(std::move(feedback)) {
  if (units_.empty()) throw ConfigError("an ensemble needs at least one reservoir", "reservoirs");
  noise_.validate();
  if (noise_.stddev.size() == 0) noise_ = NoiseModel::none(1);
  if (noise_.stddev.size() != 1 && noise_.stddev.size() != static_cast<Eigen::Index>(selection_.size())) {
    throw ConfigError("noise model size does not match the observable selection", "noise");
  }
  std::size_t offset = 0;
  for (std::size_t r = 0; r < units_.size(); ++r) {
    auto& u = units_[r];
    if (!u.backend) throw ConfigError("reservoir " + std::to_string(r) + " has no backend");
    u.encoding.validate();
    if (u.encoding.segments() != u.backend->segments()) {
      throw DimensionError("reservoir " + std::to_string(r) + " encodes " +
                           std::to_string(u.encoding.segments()) + " phases but its backend has " +
                           std::to_string(u.backend->segments()) + " segments");
    }
    if (u.backend->modes() != selection_.modes()) {
      throw DimensionError("backend mode count does not match the observable selection");
    }
    if (u.encoding.feedback_size() != feedback_.size()) {
      throw DimensionError("reservoir " + std::to_string(r) + " mask has " +
                           std::to_string(u.encoding.feedback_size()) + " columns for " +
                           std::to_string(feedback_.size()) + " feedback sources");
    }
    if (u.normalizer.lower().size() != static_cast<Eigen::Index>(selection_.size())) {
      throw DimensionError("normaliser size does not match the observable selection");
    }
    channel_offset_.push_back(offset);
    offset += u.encoding.segments();
  }
  for (const auto& f : feedback_) {
    if (f.reservoir >= units_.size() || f.observable >= selection_.size()) {
      throw ConfigError("feedback source out of range", "feedback");
    }
  }
  reseed(seed);
}

std::vector<FeedbackSource> Ensemble::self_feedback(std::size_t observables) {
  std::vector<FeedbackSource> out;
  for (std::size_t m = 0; m < observables; ++m) out.push_back({0, m});
  return out;
}

std::vector<FeedbackSource> Ensemble::cross_feedback(std::size_t reservoirs, std::size_t observable) {
  std::vector<FeedbackSource> out;
  for (std::size_t r = 0; r < reservoirs; ++r) out.push_back({r, observable});
  return out;
}

void Ensemble::reseed(std::uint64_t seed) {
  rngs_.clear();
  for (std::size_t r = 0; r < units_.size(); ++r) {
    rngs_.push_back(make_rng(seed, "noise/reservoir/" + std::to_string(r)));
  }
}

ReservoirState Ensemble::initial_state() const {
  return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(width())), 0};
}

Eigen::VectorXd Ensemble::feedback_vector(const ReservoirState& state) const {
  if (state.previous.size() != static_cast<Eigen::Index>(width())) {
    throw DimensionError("reservoir state has the wrong size");
  }
  Eigen::VectorXd f(static_cast<Eigen::Index>(feedback_.size()));
  for (std::size_t k = 0; k < feedback_.size(); ++k) {
    f(static_cast<Eigen::Index>(k)) = state.previous(
        static_cast<Eigen::Index>(feedback_[k].reservoir * selection_.size() + feedback_[k].observable));
  }
  return f;
}

Eigen::VectorXd Ensemble::phases(std::size_t unit, std::span<const double> input,
                                 const ReservoirState& state) const {
  return encode_phases(input, feedback_vector(state), units_.at(unit).encoding,
                       channel_offset_.at(unit));
}

Eigen::VectorXd Ensemble::step(std::span<const double> input, ReservoirState& state) {
  const std::size_t segments = channel_offset_.back() + units_.back().encoding.segments();
  if (input.size() > segments) {
    throw DimensionError("input of dimension " + std::to_string(input.size()) + " exceeds the " +
                         std::to_string(segments) + " pump segments of the ensemble");
  }
  const Eigen::VectorXd f = feedback_vector(state);
  const auto m = static_cast<Eigen::Index>(selection_.size());
  Eigen::VectorXd out(static_cast<Eigen::Index>(width()));
  for (std::size_t r = 0; r < units_.size(); ++r) {
    const auto& u = units_[r];
    const Eigen::VectorXd delta = encode_phases(input, f, u.encoding, channel_offset_[r]);
    const auto sigma = u.backend->covariance(std::span<const double>(delta.data(), delta.size()));
    Eigen::VectorXd o = observables_from_covariance(sigma, selection_, u.normalizer);
    if (!noise_.silent()) o += noise_.sample(selection_.size(), rngs_[r]);
    if (!o.allFinite()) {
      throw DivergenceError("reservoir " + std::to_string(r) + " produced non-finite observables at step " +
                            std::to_string(state.step));
    }
    out.segment(static_cast<Eigen::Index>(r) * m, m) = o;
  }
  state.previous = out;
  ++state.step;
  return out;
}

Eigen::MatrixXd run_sequence(const Eigen::MatrixXd& inputs, Ensemble& ensemble, std::size_t washout,
                             const std::optional<ReservoirState>& initial) {
  const auto steps = static_cast<std::size_t>(inputs.rows());
  if (washout >= steps) {
    throw DimensionError("washout " + std::to_string(washout) + " leaves no steps out of " +
                         std::to_string(steps));
  }
  ReservoirState state = initial ? *initial : ensemble.initial_state();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(steps - washout),
                      static_cast<Eigen::Index>(ensemble.width()));
  std::vector<double> row(static_cast<std::size_t>(inputs.cols()));
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      row[c] = inputs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c));
    }
    const Eigen::VectorXd o = ensemble.step(row, state);
    if (k >= washout) out.row(static_cast<Eigen::Index>(k - washout)) = o.transpose();
  }
  return out;
}

}  // namespace cvqrc::reservoir
