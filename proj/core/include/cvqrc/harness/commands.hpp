#ifndef CVQRC_HARNESS_COMMANDS_HPP
#define CVQRC_HARNESS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cvqrc/harness/config.hpp"
#include "cvqrc/harness/experiments.hpp"
#include "cvqrc/harness/records.hpp"
#include "cvqrc/reservoir/noise.hpp"

namespace cvqrc::harness {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDivergence = 3;

struct Overrides {
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::string> backend;
};

// Re-parses the config with CLI overrides folded into its source.
ExperimentConfig apply_overrides(const ExperimentConfig& config, const Overrides& overrides);

struct JsaReport {
  std::filesystem::path jsa_csv;
  std::filesystem::path spectrum_csv;
  std::filesystem::path modes_csv;
  std::size_t modes_above_one_percent = 0;  // s_k / s_1 > 0.01
  double schmidt_number = 0.0;              // 1 / sum of squared weights
  double weight_sum = 0.0;
};

// Writes jsa_magnitude.csv, schmidt_spectrum.csv and mode_profiles.csv.
JsaReport cmd_jsa(const Json& config, const std::filesystem::path& base_dir,
                  const std::filesystem::path& out_dir, std::ostream* log);

// Runs every seed; writes metrics.json, run.json and one CSV per seed.
RunRecord cmd_run_task(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                       std::ostream* log);

struct SweepSpec {
  std::string axis;
  std::vector<Json> values;
  std::vector<std::string> presets;  // optional outer loop over presets
};

// Reads the "sweep" object of an experiment config. Throws ConfigError on an
// unknown axis or an empty value list.
SweepSpec parse_sweep(const Json& j);

// Writes sweep.csv (preset, axis, axis_value, seed, metric, value) and
// metrics.json; returns the CSV path.
std::filesystem::path cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep,
                                const std::filesystem::path& out_dir, std::ostream* log);

// Trace CSV columns: point, observable, value and optionally model. Rows
// with the same point and observable are repetitions. Writes a noise preset
// to `out_file`.
reservoir::NoiseModel cmd_fit_noise(const std::vector<std::filesystem::path>& traces,
                                    const std::filesystem::path& out_file, std::ostream* log);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_COMMANDS_HPP
