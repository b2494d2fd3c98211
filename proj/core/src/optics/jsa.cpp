#include "cvqrc/optics/jsa.hpp"

#include <cmath>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

namespace {

double pump_wavelength(double signal_m, double idler_m) {
  return 1.0 / (1.0 / signal_m + 1.0 / idler_m);
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

PhaseMatchingFn sinc_phase_matching(const CrystalSpec& crystal) {
  return [crystal](double signal_m, double idler_m) {
    return sinc(0.5 * crystal.length_m * phase_mismatch(signal_m, idler_m, crystal));
  };
}

JointSpectralAmplitude build_jsa(const PumpSpec& pump, const CrystalSpec& crystal,
                                 const SpectralGrid& signal, const SpectralGrid& idler) {
  crystal.validate();
  return build_jsa(pump, sinc_phase_matching(crystal), signal, idler);
}

JointSpectralAmplitude build_jsa(const PumpSpec& pump, const PhaseMatchingFn& phase_matching,
                                 const SpectralGrid& signal, const SpectralGrid& idler) {
  pump.validate();
  Eigen::MatrixXcd values(signal.size(), idler.size());
  for (std::size_t a = 0; a < signal.size(); ++a) {
    for (std::size_t b = 0; b < idler.size(); ++b) {
      const auto p = pump_amplitude(pump_wavelength(signal[a], idler[b]), pump);
      values(a, b) = p == 0.0 ? p : p * phase_matching(signal[a], idler[b]);
    }
  }
  const double norm = values.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("joint spectral amplitude vanishes on the grid; the pump support lies "
                      "outside the energy-conservation band");
  }
  values /= norm;
  return {signal, idler, std::move(values)};
}

SegmentedJsa::SegmentedJsa(const PumpSpec& pump, const PhaseMatchingFn& phase_matching,
                           const SpectralGrid& signal, const SpectralGrid& idler)
    : signal_(signal),
      idler_(idler),
      segments_(pump.segments()),
      magnitude_(signal.size(), idler.size()),
      segment_(signal.size(), idler.size()) {
  pump.validate();
  for (std::size_t a = 0; a < signal.size(); ++a) {
    for (std::size_t b = 0; b < idler.size(); ++b) {
      const double lp = pump_wavelength(signal[a], idler[b]);
      const int seg = pump.segment_of(lp);
      segment_(a, b) = seg;
      magnitude_(a, b) = seg < 0 ? 0.0 : pump_envelope(lp, pump) * phase_matching(signal[a], idler[b]);
    }
  }
  const double norm = magnitude_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("joint spectral amplitude vanishes on the grid");
  }
  magnitude_ /= norm;
}

JointSpectralAmplitude SegmentedJsa::at(std::span<const double> phases) const {
  if (phases.size() != segments_) {
    throw DimensionError("expected " + std::to_string(segments_) + " pump phases, got " +
                         std::to_string(phases.size()));
  }
  std::vector<std::complex<double>> factor(segments_);
  for (std::size_t i = 0; i < segments_; ++i) factor[i] = std::polar(1.0, phases[i]);

  Eigen::MatrixXcd values(magnitude_.rows(), magnitude_.cols());
  for (Eigen::Index b = 0; b < values.cols(); ++b) {
    for (Eigen::Index a = 0; a < values.rows(); ++a) {
      const int seg = segment_(a, b);
      values(a, b) = seg < 0 ? std::complex<double>{} : magnitude_(a, b) * factor[seg];
    }
  }
  return {signal_, idler_, std::move(values)};
}

}  // namespace cvqrc::optics
