#ifndef CVQRC_OPTICS_SPECTRAL_GRID_HPP
#define CVQRC_OPTICS_SPECTRAL_GRID_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace cvqrc::optics {

// Uniform wavelength grid. Samples sit at cell midpoints so that
// sum(f(sample) * spacing) is the midpoint-rule integral over [lower, upper].
class SpectralGrid {
 public:
  // Cells of width (upper - lower) / count; throws ConfigError unless
  // lower < upper and count >= 2.
  SpectralGrid(double lower_m, double upper_m, std::size_t count);

  static SpectralGrid centered(double center_m, double half_span_m, std::size_t count);

  std::span<const double> samples() const noexcept { return samples_; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }
  std::size_t size() const noexcept { return samples_.size(); }
  double spacing() const noexcept { return spacing_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

  bool operator==(const SpectralGrid& other) const noexcept {
    return lower_ == other.lower_ && upper_ == other.upper_ && size() == other.size();
  }

 private:
  double lower_;
  double upper_;
  double spacing_;
  std::vector<double> samples_;
};

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_SPECTRAL_GRID_HPP
