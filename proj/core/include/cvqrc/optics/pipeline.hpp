#ifndef CVQRC_OPTICS_PIPELINE_HPP
#define CVQRC_OPTICS_PIPELINE_HPP

#include <cstddef>
#include <span>

#include "cvqrc/optics/covariance.hpp"
#include "cvqrc/optics/crystal.hpp"
#include "cvqrc/optics/jsa.hpp"
#include "cvqrc/optics/measurement.hpp"
#include "cvqrc/optics/schmidt.hpp"

namespace cvqrc::optics {

struct TwinConfig {
  CrystalSpec crystal;  // the degenerate-point poling period is used if unset
  double pump_center_m = 780e-9;
  double pump_sigma_m = 2e-9;
  std::size_t segments = 1;
  // Signal and idler share one grid centred on twice the pump wavelength.
  double grid_half_span_m = 60e-9;
  std::size_t grid_points = 128;
  std::size_t modes = 1;  // frexel count n
  std::size_t kept = 0;   // 0 selects max(n, 12)
  double frexel_half_span_m = 50e-9;
  double r_scale = kDefaultSqueezingScale;

  void validate() const;
};

// Pump phases -> JSA -> supermodes -> frexel covariance.
class DigitalTwin {
 public:
  explicit DigitalTwin(TwinConfig config);

  const TwinConfig& config() const noexcept { return config_; }
  std::size_t segments() const noexcept { return config_.segments; }
  std::size_t modes() const noexcept { return config_.modes; }
  double degenerate_wavelength() const noexcept { return 2.0 * config_.pump_center_m; }

  JointSpectralAmplitude jsa(std::span<const double> phases) const;
  SchmidtDecomposition decompose(std::span<const double> phases) const;
  MeasurementBasis measurement(const SchmidtDecomposition& schmidt) const;
  CovarianceMatrix covariance(std::span<const double> phases) const;

  // Decomposition and basis at all-zero pump phases.
  const SchmidtDecomposition& reference() const noexcept { return reference_; }
  const MeasurementBasis& reference_basis() const noexcept { return reference_basis_; }

 private:
  TwinConfig config_;
  SegmentedJsa segmented_;
  SchmidtDecomposition reference_;
  MeasurementBasis reference_basis_;
};

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_PIPELINE_HPP
