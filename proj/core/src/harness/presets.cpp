#include "cvqrc/harness/presets.hpp"

#include <numbers>

namespace cvqrc::harness {

namespace fs = std::filesystem;

namespace {

constexpr double kSpeedOfLight = 299792458.0;

void require_kind(const Json& j, const std::string& kind) {
  const auto actual = required<std::string>(j, "kind");
  if (actual != kind) {
    throw ConfigError("expected a '" + kind + "' preset, found '" + actual + "'", "kind");
  }
}

}  // namespace

double angular_frequency(double wavelength_m) {
  return 2.0 * std::numbers::pi * kSpeedOfLight / wavelength_m;
}

EncodingPreset parse_encoding_preset(const Json& j) {
  const auto kind = required<std::string>(j, "kind");
  if (kind == "global_phase") {
    FixedGlobalPhase p;
    p.v_pi2 = required<double>(j, "v_pi2");
    if (!(p.v_pi2 > 0.0)) throw ConfigError("v_pi2 must be positive", "v_pi2");
    p.alpha = vector_from_json(j, "alpha");
    p.beta = j.contains("beta") ? vector_from_json(j, "beta") : Eigen::VectorXd::Zero(p.alpha.size());
    p.mask = matrix_from_json(j, "mask");
    const auto r = p.alpha.size();
    if (r == 0 || p.beta.size() != r || p.mask.rows() != r || p.mask.cols() != r) {
      throw ConfigError("global-phase preset needs alpha, beta of length R and an R x R mask", "mask");
    }
    if (optional_or<bool>(j, "units_of_v_pi2", false)) {
      p.alpha *= p.v_pi2;
      p.beta *= p.v_pi2;
      p.mask *= p.v_pi2;
    }
    return p;
  }
  if (kind == "random_global_phase") {
    RandomGlobalPhase p;
    p.v_pi2 = required<double>(j, "v_pi2");
    p.input_range = optional_or<double>(j, "input_range", p.input_range);
    p.mask_scale = optional_or<double>(j, "mask_scale", p.mask_scale);
    p.reservoirs = optional_or<std::size_t>(j, "reservoirs", p.reservoirs);
    if (!(p.v_pi2 > 0.0)) throw ConfigError("v_pi2 must be positive", "v_pi2");
    if (p.reservoirs == 0) throw ConfigError("reservoir count must be positive", "reservoirs");
    return p;
  }
  if (kind == "general") {
    GeneralEncoding p;
    p.delta_amp_s = required<double>(j, "delta_amp_s");
    p.mask_scale = optional_or<double>(j, "mask_scale", p.mask_scale);
    if (j.contains("mask_range")) {
      const auto range = required<std::vector<double>>(j, "mask_range");
      if (range.size() != 2 || !(range[0] < range[1])) {
        throw ConfigError("mask_range must be [lo, hi] with lo < hi", "mask_range");
      }
      p.mask_lo = range[0];
      p.mask_hi = range[1];
    }
    p.calibration_samples = optional_or<std::size_t>(j, "calibration_samples", p.calibration_samples);
    if (p.calibration_samples < 2) {
      throw ConfigError("need at least two calibration samples", "calibration_samples");
    }
    return p;
  }
  throw ConfigError("unknown encoding preset kind '" + kind + "'", "kind");
}

EncodingPreset load_encoding_preset(const std::string& ref, const fs::path& base_dir) {
  return parse_encoding_preset(load_json(resolve_resource(ref, "presets", base_dir, "preset")));
}

reservoir::NoiseModel parse_noise(const Json& j) {
  require_kind(j, "noise");
  const auto& s = j.at("stddev");
  reservoir::NoiseModel model;
  if (s.is_number()) {
    model = reservoir::NoiseModel::uniform(1, s.get<double>());
  } else {
    model.stddev = vector_from_json(j, "stddev");
  }
  model.validate();
  return model;
}

reservoir::NoiseModel load_noise_preset(const Json& ref, const fs::path& base_dir) {
  if (ref.is_number()) {
    auto model = reservoir::NoiseModel::uniform(1, ref.get<double>());
    model.validate();
    return model;
  }
  if (!ref.is_string()) throw ConfigError("noise must be a number or a preset name", "noise");
  const auto name = ref.get<std::string>();
  fs::path path;
  try {
    path = resolve_resource(name, "presets", base_dir, "noise");
  } catch (const ConfigError&) {
    path = resolve_resource("noise_" + name, "presets", base_dir, "noise");
  }
  return parse_noise(load_json(path));
}

optics::CrystalSpec load_crystal_ref(const std::string& ref, const fs::path& base_dir) {
  return optics::load_crystal(resolve_resource(ref, "crystals", base_dir, "crystal"));
}

optics::TwinConfig parse_twin_config(const Json& j, const fs::path& base_dir) {
  optics::TwinConfig c;
  c.crystal = load_crystal_ref(required<std::string>(j, "crystal"), base_dir);
  c.crystal.length_m = optional_or<double>(j, "length_m", c.crystal.length_m);
  c.pump_center_m = optional_or<double>(j, "pump_center_m", c.pump_center_m);
  c.pump_sigma_m = optional_or<double>(j, "pump_sigma_m", c.pump_sigma_m);
  c.grid_half_span_m = optional_or<double>(j, "grid_half_span_m", c.grid_half_span_m);
  c.grid_points = optional_or<std::size_t>(j, "grid_points", c.grid_points);
  c.frexel_half_span_m = optional_or<double>(j, "frexel_half_span_m", c.frexel_half_span_m);
  c.r_scale = optional_or<double>(j, "r_scale", c.r_scale);
  c.kept = optional_or<std::size_t>(j, "kept", c.kept);
  c.segments = optional_or<std::size_t>(j, "segments", c.segments);
  c.modes = optional_or<std::size_t>(j, "modes", c.modes);
  return c;
}

optics::TwinConfig load_twin_config(const Json& ref, const fs::path& base_dir) {
  if (ref.is_object()) return parse_twin_config(ref, base_dir);
  if (!ref.is_string()) throw ConfigError("twin must be a preset name or an object", "twin");
  const auto path = resolve_resource(ref.get<std::string>(), "presets", base_dir, "twin");
  return parse_twin_config(load_json(path), path.parent_path());
}

JsaSetup parse_jsa_setup(const Json& j, const fs::path& base_dir) {
  JsaSetup s;
  s.crystal = load_crystal_ref(required<std::string>(j, "crystal"), base_dir);
  s.crystal.length_m = optional_or<double>(j, "length_m", s.crystal.length_m);
  if (j.contains("poling_period_m") && !j.at("poling_period_m").is_null()) {
    s.crystal.poling_period_m = required<double>(j, "poling_period_m");
  }
  const Json pump = optional_or<Json>(j, "pump", Json::object());
  s.pump.center_m = optional_or<double>(pump, "center_m", s.pump.center_m);
  s.pump.sigma_m = optional_or<double>(pump, "sigma_m", s.pump.sigma_m);
  if (pump.contains("phases")) s.pump.phases = required<std::vector<double>>(pump, "phases");
  const Json grid = optional_or<Json>(j, "grid", Json::object());
  s.grid_center_m = optional_or<double>(grid, "center_m", 2.0 * s.pump.center_m);
  s.grid_half_span_m = optional_or<double>(grid, "half_span_m", s.grid_half_span_m);
  s.grid_points = optional_or<std::size_t>(grid, "points", s.grid_points);
  s.kept = optional_or<std::size_t>(j, "kept", s.kept);
  s.r_scale = optional_or<double>(j, "r_scale", s.r_scale);
  s.pump.validate();
  s.crystal.validate();
  return s;
}

}  // namespace cvqrc::harness
