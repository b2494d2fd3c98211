#ifndef CVQRC_OPTICS_COVARIANCE_HPP
#define CVQRC_OPTICS_COVARIANCE_HPP

#include <cstddef>

#include <Eigen/Dense>

#include "cvqrc/optics/measurement.hpp"
#include "cvqrc/optics/schmidt.hpp"

namespace cvqrc::optics {

// Quadrature covariance of an n-mode Gaussian state, grouped ordering
// [q_1..q_n, p_1..p_n], vacuum variance 1.
class CovarianceMatrix {
 public:
  // Throws DimensionError unless square with even size, DomainError unless
  // symmetric to 1e-10 relative to the largest entry. Stored symmetrised.
  explicit CovarianceMatrix(Eigen::MatrixXd entries);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  std::size_t modes() const noexcept { return static_cast<std::size_t>(entries_.rows() / 2); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  bool is_positive_definite() const;
  // Ascending nu_1..nu_n; all equal 1 for a pure state. Throws DomainError
  // if the matrix is not positive definite.
  Eigen::VectorXd symplectic_eigenvalues() const;

 private:
  Eigen::MatrixXd entries_;
};

// Omega = [[0, I], [-I, 0]].
Eigen::MatrixXd symplectic_form(std::size_t n);

// S_U = [[Re U, -Im U], [Im U, Re U]].
Eigen::MatrixXd symplectic_from_unitary(const Eigen::MatrixXcd& U);

// Block-diagonal covariance of independently squeezed modes whose ellipses
// are rotated by `angles`: mode k has variances e^{2r} along angle_k and
// e^{-2r} orthogonal to it.
Eigen::MatrixXd rotated_squeezed_covariance(const Eigen::VectorXd& r, const Eigen::VectorXd& angles);

// S_U^T D S_U with D from the first n squeezing parameters and angles.
CovarianceMatrix covariance_in_basis(const Eigen::VectorXd& r, const Eigen::VectorXd& angles,
                                     const Eigen::MatrixXcd& U);
CovarianceMatrix covariance_in_basis(const SchmidtDecomposition& schmidt,
                                     const MeasurementBasis& basis);

// Closed form for a single global pump phase delta and a real overlap
// matrix whose rows are supermodes:
//   sigma_{lj} = sum_a U_{a,l} U_{a,j} B_a(delta).
// The complex overload throws DomainError if U has an imaginary part.
CovarianceMatrix analytic_global_phase_covariance(double delta, const Eigen::MatrixXd& U,
                                                  const Eigen::VectorXd& r);
CovarianceMatrix analytic_global_phase_covariance(double delta, const Eigen::MatrixXcd& U,
                                                  const Eigen::VectorXd& r);

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_COVARIANCE_HPP
