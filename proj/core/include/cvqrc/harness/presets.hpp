#ifndef CVQRC_HARNESS_PRESETS_HPP
#define CVQRC_HARNESS_PRESETS_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "cvqrc/harness/config.hpp"
#include "cvqrc/optics/crystal.hpp"
#include "cvqrc/optics/pipeline.hpp"
#include "cvqrc/reservoir/noise.hpp"

namespace cvqrc::harness {

// R single-segment reservoirs with fixed drive voltages (volts) and a full
// R x R mask on the normalised q variances.
struct FixedGlobalPhase {
  double v_pi2 = 0.075;
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
  Eigen::MatrixXd mask;
};

// Per-seed random global-phase reservoirs: alpha ~ U[-w, w] and a U[-1, 1]
// mask rescaled to largest singular value `mask_scale`, both in units of
// V_pi/2.
struct RandomGlobalPhase {
  double v_pi2 = 0.075;
  double input_range = 1.25;
  double mask_scale = 0.7;
  std::size_t reservoirs = 15;
};

// N-segment encoding with random alpha, beta, mask scaled by delta_amp.
struct GeneralEncoding {
  double delta_amp_s = 1e-16;
  double mask_scale = 0.4;
  double mask_lo = 0.0;
  double mask_hi = 2.0;
  std::size_t calibration_samples = 500;
};

using EncodingPreset = std::variant<FixedGlobalPhase, RandomGlobalPhase, GeneralEncoding>;

struct JsaSetup {
  optics::CrystalSpec crystal;
  optics::PumpSpec pump;
  double grid_center_m = 1.56e-6;
  double grid_half_span_m = 4e-8;
  std::size_t grid_points = 256;
  std::size_t kept = 40;
  double r_scale = optics::kDefaultSqueezingScale;
};

EncodingPreset parse_encoding_preset(const Json& j);
EncodingPreset load_encoding_preset(const std::string& ref, const std::filesystem::path& base_dir);

// `ref` is a number (uniform stddev), a preset id ("low", "average",
// "none" or a file) resolved under presets/noise_<id>.json.
reservoir::NoiseModel parse_noise(const Json& j);
reservoir::NoiseModel load_noise_preset(const Json& ref, const std::filesystem::path& base_dir);

optics::CrystalSpec load_crystal_ref(const std::string& ref, const std::filesystem::path& base_dir);

optics::TwinConfig parse_twin_config(const Json& j, const std::filesystem::path& base_dir);
optics::TwinConfig load_twin_config(const Json& ref, const std::filesystem::path& base_dir);

JsaSetup parse_jsa_setup(const Json& j, const std::filesystem::path& base_dir);

// Angular frequency 2 pi c / lambda (rad/s).
double angular_frequency(double wavelength_m);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_PRESETS_HPP
