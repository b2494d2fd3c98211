#ifndef CVQRC_OPTICS_PUMP_HPP
#define CVQRC_OPTICS_PUMP_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace cvqrc::optics {

// Gaussian pump envelope whose +-3 sigma support is cut into equal,
// contiguous frequency segments, each carrying its own phase.
struct PumpSpec {
  double center_m = 780e-9;
  double sigma_m = 2e-9;
  std::vector<double> phases{0.0};  // one per segment, radians

  std::size_t segments() const noexcept { return phases.size(); }
  double support_lower() const noexcept { return center_m - 3.0 * sigma_m; }
  double support_upper() const noexcept { return center_m + 3.0 * sigma_m; }

  // Segment index containing `lambda_m`, or -1 outside the support.
  int segment_of(double lambda_m) const noexcept;

  // Throws ConfigError unless sigma > 0 and at least one segment exists.
  void validate() const;
};

// exp(-(lambda - center)^2 / (2 sigma^2)) * exp(i phase_of_segment), zero
// outside +-3 sigma.
std::complex<double> pump_amplitude(double lambda_m, const PumpSpec& pump);

// Real envelope without the segment phase (zero outside the support).
double pump_envelope(double lambda_m, const PumpSpec& pump);

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_PUMP_HPP
