#ifndef CVQRC_RESERVOIR_ENSEMBLE_HPP
#define CVQRC_RESERVOIR_ENSEMBLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvqrc/reservoir/backend.hpp"
#include "cvqrc/reservoir/encoding.hpp"
#include "cvqrc/reservoir/noise.hpp"
#include "cvqrc/reservoir/observables.hpp"
#include "cvqrc/rng.hpp"

namespace cvqrc::reservoir {

// One entry of the feedback vector: observable `observable` of reservoir
// `reservoir` at the previous step.
struct FeedbackSource {
  std::size_t reservoir = 0;
  std::size_t observable = 0;
};

struct ReservoirUnit {
  EncodingParams encoding;  // mask columns index the ensemble's feedback sources
  std::shared_ptr<const Backend> backend;
  Normalizer normalizer;
};

// Previous (measured) observables of all reservoirs, reservoir-major.
struct ReservoirState {
  Eigen::VectorXd previous;
  std::size_t step = 0;
};

// R reservoirs driven by the same input. All reservoirs see the same
// feedback vector; each applies its own mask rows to it. Input components
// are assigned cyclically over the segments of all reservoirs in order.
class Ensemble {
 public:
  Ensemble(std::vector<ReservoirUnit> units, ObservableSelection selection, NoiseModel noise,
           std::vector<FeedbackSource> feedback, std::uint64_t seed);

  // Every observable of a single reservoir feeds back into it.
  static std::vector<FeedbackSource> self_feedback(std::size_t observables);
  // Observable `observable` of each of R reservoirs (full R x R mask).
  static std::vector<FeedbackSource> cross_feedback(std::size_t reservoirs, std::size_t observable);

  std::size_t reservoirs() const noexcept { return units_.size(); }
  std::size_t width() const noexcept { return units_.size() * selection_.size(); }
  const ObservableSelection& selection() const noexcept { return selection_; }
  const std::vector<ReservoirUnit>& units() const noexcept { return units_; }
  const NoiseModel& noise() const noexcept { return noise_; }

  ReservoirState initial_state() const;
  // Restarts every reservoir's noise stream from `seed`.
  void reseed(std::uint64_t seed);

  Eigen::VectorXd feedback_vector(const ReservoirState& state) const;
  // Pump phases of reservoir `unit` for this input and state.
  Eigen::VectorXd phases(std::size_t unit, std::span<const double> input,
                         const ReservoirState& state) const;
  // Encode, evaluate, normalise, add noise; the state keeps the noisy values.
  // Throws DimensionError if the input has more components than the
  // ensemble has segments, DivergenceError if an observable is not finite.
  Eigen::VectorXd step(std::span<const double> input, ReservoirState& state);

 private:
  std::vector<ReservoirUnit> units_;
  ObservableSelection selection_;
  NoiseModel noise_;
  std::vector<FeedbackSource> feedback_;
  std::vector<std::size_t> channel_offset_;
  std::vector<Rng> rngs_;
};

// Steps the ensemble through `inputs` (one row per step) and returns the
// observables of steps washout.. as rows. `initial` overrides the zero state.
Eigen::MatrixXd run_sequence(const Eigen::MatrixXd& inputs, Ensemble& ensemble, std::size_t washout,
                             const std::optional<ReservoirState>& initial = std::nullopt);

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_ENSEMBLE_HPP
