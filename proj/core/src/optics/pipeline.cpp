#include "cvqrc/optics/pipeline.hpp"

#include <algorithm>
#include <vector>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

namespace {

TwinConfig resolved(TwinConfig config) {
  config.validate();
  if (config.kept == 0) config.kept = std::max<std::size_t>(config.modes, 12);
  config.crystal = with_degenerate_poling(std::move(config.crystal), 2.0 * config.pump_center_m);
  return config;
}

PumpSpec pump_of(const TwinConfig& config) {
  PumpSpec pump;
  pump.center_m = config.pump_center_m;
  pump.sigma_m = config.pump_sigma_m;
  pump.phases.assign(config.segments, 0.0);
  return pump;
}

SpectralGrid grid_of(const TwinConfig& config) {
  return SpectralGrid::centered(2.0 * config.pump_center_m, config.grid_half_span_m,
                                config.grid_points);
}

}  // namespace

void TwinConfig::validate() const {
  crystal.validate();
  if (!(pump_center_m > 0.0)) throw ConfigError("pump centre must be positive", "pump_center_m");
  if (!(pump_sigma_m > 0.0)) throw ConfigError("pump width must be positive", "pump_sigma_m");
  if (segments == 0) throw ConfigError("need at least one pump segment", "segments");
  if (modes == 0) throw ConfigError("need at least one measured mode", "modes");
  if (kept != 0 && kept < modes) throw ConfigError("kept modes must be at least n", "kept");
  if (!(grid_half_span_m > 0.0)) throw ConfigError("grid half-span must be positive", "grid_half_span_m");
  if (!(frexel_half_span_m > 0.0)) {
    throw ConfigError("frexel half-span must be positive", "frexel_half_span_m");
  }
  if (!(r_scale >= 0.0)) throw ConfigError("squeezing scale must be non-negative", "r_scale");
}

DigitalTwin::DigitalTwin(TwinConfig config)
    : config_(resolved(std::move(config))),
      segmented_(pump_of(config_), sinc_phase_matching(config_.crystal), grid_of(config_),
                 grid_of(config_)),
      reference_(decompose(std::vector<double>(config_.segments, 0.0))),
      reference_basis_(measurement(reference_)) {}

JointSpectralAmplitude DigitalTwin::jsa(std::span<const double> phases) const {
  return segmented_.at(phases);
}

SchmidtDecomposition DigitalTwin::decompose(std::span<const double> phases) const {
  return schmidt_decompose(jsa(phases), config_.kept, config_.r_scale);
}

MeasurementBasis DigitalTwin::measurement(const SchmidtDecomposition& schmidt) const {
  return build_measurement_matrix(schmidt, config_.modes, config_.frexel_half_span_m,
                                  degenerate_wavelength());
}

CovarianceMatrix DigitalTwin::covariance(std::span<const double> phases) const {
  const auto schmidt = decompose(phases);
  return covariance_in_basis(schmidt, measurement(schmidt));
}

}  // namespace cvqrc::optics
