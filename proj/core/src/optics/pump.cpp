#include "cvqrc/optics/pump.hpp"

#include <cmath>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

int PumpSpec::segment_of(double lambda_m) const noexcept {
  const double lo = support_lower();
  const double hi = support_upper();
  if (!(lambda_m >= lo && lambda_m <= hi)) return -1;
  const auto count = static_cast<double>(segments());
  const auto index = static_cast<int>(std::floor((lambda_m - lo) / (hi - lo) * count));
  return std::min(index, static_cast<int>(segments()) - 1);
}

void PumpSpec::validate() const {
  if (!(sigma_m > 0.0)) throw ConfigError("pump sigma must be positive", "pump.sigma_m");
  if (phases.empty()) throw ConfigError("pump needs at least one segment", "pump.segments");
  if (!(center_m > 0.0)) throw ConfigError("pump center must be positive", "pump.center_m");
}

double pump_envelope(double lambda_m, const PumpSpec& pump) {
  if (pump.segment_of(lambda_m) < 0) return 0.0;
  const double x = (lambda_m - pump.center_m) / pump.sigma_m;
  return std::exp(-0.5 * x * x);
}

std::complex<double> pump_amplitude(double lambda_m, const PumpSpec& pump) {
  const int segment = pump.segment_of(lambda_m);
  if (segment < 0) return {0.0, 0.0};
  return std::polar(pump_envelope(lambda_m, pump), pump.phases[static_cast<std::size_t>(segment)]);
}

}  // namespace cvqrc::optics
