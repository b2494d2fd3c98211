#include "cvqrc/optics/measurement.hpp"

#include <cmath>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

namespace {

void normalise_rows(Eigen::MatrixXcd& m, double zero_tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double norm = m.row(i).norm();
    if (!(norm > zero_tol)) {
      throw DomainError("overlap of supermode " + std::to_string(i + 1) +
                        " with the detection window is numerically zero");
    }
    m.row(i) /= norm;
  }
}

}  // namespace

MeasurementBasis MeasurementBasis::from_overlap(Eigen::MatrixXcd overlap) {
  if (overlap.rows() == 0 || overlap.rows() != overlap.cols()) {
    throw DimensionError("overlap matrix must be square and non-empty");
  }
  normalise_rows(overlap, 0.0);
  MeasurementBasis basis;
  basis.n = static_cast<std::size_t>(overlap.rows());
  basis.overlap = std::move(overlap);
  return basis;
}

bool MeasurementBasis::is_real(double tol) const {
  return overlap.imag().cwiseAbs().maxCoeff() <= tol;
}

double MeasurementBasis::unitarity_defect() const {
  const auto id = Eigen::MatrixXcd::Identity(overlap.rows(), overlap.rows());
  return (overlap * overlap.adjoint() - id).cwiseAbs().maxCoeff();
}

MeasurementBasis build_measurement_matrix(const SchmidtDecomposition& schmidt, std::size_t n,
                                          double half_span_m, double center_m) {
  if (n == 0) throw ConfigError("frexel count must be positive", "modes");
  if (n > schmidt.kept()) {
    throw ConfigError("frexel count " + std::to_string(n) + " exceeds the " +
                      std::to_string(schmidt.kept()) + " kept Schmidt modes", "modes");
  }
  if (!(half_span_m > 0.0)) throw ConfigError("frexel half-span must be positive", "half_span_m");
  const auto& grid = schmidt.signal;
  const double lo = center_m - half_span_m;
  const double hi = center_m + half_span_m;
  const double slack = 1e-9 * grid.spacing();
  if (lo < grid.lower() - slack || hi > grid.upper() + slack) {
    throw ConfigError("frexel window lies outside the signal grid", "half_span_m");
  }

  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(nn, nn);
  const double width = 2.0 * half_span_m / static_cast<double>(n);
  for (std::size_t a = 0; a < grid.size(); ++a) {
    const double x = grid[a];
    if (x < lo || x >= hi) continue;
    auto j = static_cast<Eigen::Index>(std::floor((x - lo) / width));
    if (j >= nn) j = nn - 1;
    const auto row = static_cast<Eigen::Index>(a);
    U.col(j) += schmidt.modes_signal.row(row).head(nn).transpose() * grid.spacing();
  }
  // |U_ij| scales like sqrt(frexel width) for unit-norm modes.
  normalise_rows(U, 1e-12 * std::sqrt(2.0 * half_span_m));

  MeasurementBasis basis;
  basis.n = n;
  basis.half_span_m = half_span_m;
  basis.center_m = center_m;
  basis.overlap = std::move(U);
  return basis;
}

}  // namespace cvqrc::optics
