#ifndef CVQRC_OPTICS_MEASUREMENT_HPP
#define CVQRC_OPTICS_MEASUREMENT_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "cvqrc/optics/schmidt.hpp"

namespace cvqrc::optics {

// n rectangular detection bands (frexels) of equal width tiling
// [center - half_span, center + half_span], and the overlap of the first n
// supermodes with each of them.
struct MeasurementBasis {
  std::size_t n = 1;
  double half_span_m = 0.0;
  double center_m = 0.0;
  // Row i: supermode i, column j: frexel j. Rows have unit norm.
  Eigen::MatrixXcd overlap;

  // Wraps an explicit n x n overlap matrix (rows are normalised).
  static MeasurementBasis from_overlap(Eigen::MatrixXcd overlap);

  bool is_real(double tol = 1e-12) const;
  // Largest entry of |U U^H - I|; zero for an exactly unitary overlap.
  double unitarity_defect() const;
};

// U_ij = sum over grid samples of frexel j of h_i(lambda) * dl. Samples are
// assigned to the frexel containing their midpoint. Throws ConfigError if the
// window leaves the signal grid or n exceeds the kept modes, and DomainError
// if a row vanishes before normalisation.
MeasurementBasis build_measurement_matrix(const SchmidtDecomposition& schmidt, std::size_t n,
                                          double half_span_m, double center_m);

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_MEASUREMENT_HPP
