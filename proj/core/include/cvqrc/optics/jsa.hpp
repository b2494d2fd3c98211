#ifndef CVQRC_OPTICS_JSA_HPP
#define CVQRC_OPTICS_JSA_HPP

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "cvqrc/optics/crystal.hpp"
#include "cvqrc/optics/pump.hpp"
#include "cvqrc/optics/spectral_grid.hpp"

namespace cvqrc::optics {

// Real phase-matching factor phi(lambda_S, lambda_I).
using PhaseMatchingFn = std::function<double(double signal_m, double idler_m)>;

// sin(x)/x with the removable singularity filled in.
double sinc(double x);

// sinc(L * Delta k / 2) for the given crystal.
PhaseMatchingFn sinc_phase_matching(const CrystalSpec& crystal);

// J(lambda_S, lambda_I) sampled on signal (rows) x idler (columns).
struct JointSpectralAmplitude {
  SpectralGrid signal;
  SpectralGrid idler;
  Eigen::MatrixXcd values;
};

// J[a, b] = p(lambda_P) * phi(lambda_S[a], lambda_I[b]) with
// 1/lambda_P = 1/lambda_S + 1/lambda_I, normalised to unit Frobenius norm.
// Throws DomainError when the result is identically zero.
JointSpectralAmplitude build_jsa(const PumpSpec& pump, const CrystalSpec& crystal,
                                 const SpectralGrid& signal, const SpectralGrid& idler);
JointSpectralAmplitude build_jsa(const PumpSpec& pump, const PhaseMatchingFn& phase_matching,
                                 const SpectralGrid& signal, const SpectralGrid& idler);

// The phase-independent part of a segmented-pump JSA, evaluated once so
// that J(phases) is a cheap elementwise product. Segments are disjoint, so
// the unit-norm scaling does not depend on the phases.
class SegmentedJsa {
 public:
  SegmentedJsa(const PumpSpec& pump, const PhaseMatchingFn& phase_matching,
               const SpectralGrid& signal, const SpectralGrid& idler);

  JointSpectralAmplitude at(std::span<const double> phases) const;
  std::size_t segments() const noexcept { return segments_; }
  const SpectralGrid& signal() const noexcept { return signal_; }
  const SpectralGrid& idler() const noexcept { return idler_; }

 private:
  SpectralGrid signal_;
  SpectralGrid idler_;
  std::size_t segments_;
  Eigen::MatrixXd magnitude_;  // normalised |p| * phi
  Eigen::MatrixXi segment_;    // -1 outside the pump support
};

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_JSA_HPP
