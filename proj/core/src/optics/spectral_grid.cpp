#include "cvqrc/optics/spectral_grid.hpp"

#include <cmath>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

SpectralGrid::SpectralGrid(double lower_m, double upper_m, std::size_t count)
    : lower_(lower_m), upper_(upper_m), spacing_(0.0) {
  if (count < 2) throw ConfigError("spectral grid needs at least 2 samples", "grid.count");
  if (!(lower_m < upper_m) || !std::isfinite(lower_m) || !std::isfinite(upper_m)) {
    throw ConfigError("spectral grid bounds must satisfy lower < upper", "grid");
  }
  spacing_ = (upper_m - lower_m) / static_cast<double>(count);
  samples_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    samples_[i] = lower_m + (static_cast<double>(i) + 0.5) * spacing_;
  }
}

SpectralGrid SpectralGrid::centered(double center_m, double half_span_m, std::size_t count) {
  return SpectralGrid(center_m - half_span_m, center_m + half_span_m, count);
}

}  // namespace cvqrc::optics
