#ifndef CVQRC_HARNESS_EXPERIMENTS_HPP
#define CVQRC_HARNESS_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvqrc/harness/config.hpp"
#include "cvqrc/harness/presets.hpp"
#include "cvqrc/reservoir/ensemble.hpp"

namespace cvqrc::harness {

enum class Task { xor_task, parity, memory, double_scroll, kernel_quality };

Task task_from_string(const std::string& name);
const char* to_string(Task task);

struct ExperimentConfig {
  Task task = Task::xor_task;
  std::string preset = "xor";
  EncodingPreset encoding;
  std::string backend = "analytic";  // or "pipeline"
  std::string noise_label = "none";
  reservoir::NoiseModel noise = reservoir::NoiseModel::none(1);
  std::size_t reservoirs = 0;  // 0: as given by the preset
  std::size_t segments = 1;
  bool segments_follow_modes = false;
  std::size_t modes = 1;
  std::string observables = "auto";  // "single", "all" or "auto"
  std::size_t tau = 1;
  std::size_t train = 70;
  std::size_t test = 49;
  std::size_t washout = 10;
  std::size_t horizon = 9;
  std::vector<std::uint64_t> seeds{0};
  double ridge = 0.0;
  std::optional<optics::TwinConfig> twin;
  std::filesystem::path base_dir = ".";
  Json source = Json::object();
  std::string hash;

  std::size_t effective_segments() const noexcept { return segments_follow_modes ? modes : segments; }
};

// Fields missing from `j` take task-specific defaults. Throws ConfigError
// naming the offending key.
ExperimentConfig parse_experiment(const Json& j, const std::filesystem::path& base_dir);
ExperimentConfig load_experiment(const std::filesystem::path& path);

// Sweep axes: train_size, tau, R, n, N, noise.
bool is_sweep_axis(const std::string& axis);
// Copy of `config` with one axis set to `value`; the hash reflects the change.
ExperimentConfig with_axis_value(const ExperimentConfig& config, const std::string& axis,
                                 const Json& value);

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> metrics;
  Eigen::MatrixXd prediction;  // test split or forecast, one column per channel
  Eigen::MatrixXd target;

  double metric(const std::string& name) const;
};

// Builds the reservoir ensemble a task would use for `seed`. Inputs are
// assumed to lie in [input_lo, input_hi] (used by phase-box calibration).
reservoir::Ensemble build_ensemble(const ExperimentConfig& config, std::uint64_t seed,
                                   double input_lo, double input_hi);

// Throws DivergenceError if the reservoir or a forecast leaves its range.
SeedOutcome run_seed(const ExperimentConfig& config, std::uint64_t seed);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_EXPERIMENTS_HPP
