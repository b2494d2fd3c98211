#include "cvqrc/optics/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw DimensionError("covariance matrix must be square with even, non-zero size; got " +
                         std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) throw DomainError("covariance matrix has non-finite entries");
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw DomainError("covariance matrix is not symmetric (max deviation " + std::to_string(asym) +
                      ")");
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

bool CovarianceMatrix::is_positive_definite() const {
  Eigen::LLT<Eigen::MatrixXd> llt(entries_);
  return llt.info() == Eigen::Success;
}

Eigen::VectorXd CovarianceMatrix::symplectic_eigenvalues() const {
  // With sigma = L L^T, A = L^T Omega L is antisymmetric and A^T A has the
  // squared symplectic eigenvalues, each twice.
  Eigen::LLT<Eigen::MatrixXd> llt(entries_);
  if (llt.info() != Eigen::Success) {
    throw DomainError("symplectic eigenvalues need a positive definite covariance");
  }
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd A = L.transpose() * symplectic_form(modes()) * L;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(A.transpose() * A, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd sq = eig.eigenvalues();
  Eigen::VectorXd nu(static_cast<Eigen::Index>(modes()));
  for (Eigen::Index k = 0; k < nu.size(); ++k) {
    nu(k) = std::sqrt(std::max(0.0, 0.5 * (sq(2 * k) + sq(2 * k + 1))));
  }
  return nu;
}

Eigen::MatrixXd symplectic_form(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  omega.topRightCorner(m, m).setIdentity();
  omega.bottomLeftCorner(m, m) = -Eigen::MatrixXd::Identity(m, m);
  return omega;
}

Eigen::MatrixXd symplectic_from_unitary(const Eigen::MatrixXcd& U) {
  if (U.rows() != U.cols()) throw DimensionError("symplectic_from_unitary needs a square matrix");
  const auto n = U.rows();
  Eigen::MatrixXd S(2 * n, 2 * n);
  S.topLeftCorner(n, n) = U.real();
  S.topRightCorner(n, n) = -U.imag();
  S.bottomLeftCorner(n, n) = U.imag();
  S.bottomRightCorner(n, n) = U.real();
  return S;
}

Eigen::MatrixXd rotated_squeezed_covariance(const Eigen::VectorXd& r, const Eigen::VectorXd& angles) {
  if (r.size() != angles.size()) throw DimensionError("one squeezing angle per mode is required");
  const auto n = r.size();
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ep = std::exp(2.0 * r(k));
    const double em = std::exp(-2.0 * r(k));
    const double c = std::cos(angles(k));
    const double s = std::sin(angles(k));
    D(k, k) = ep * c * c + em * s * s;
    D(k + n, k + n) = ep * s * s + em * c * c;
    D(k, k + n) = D(k + n, k) = (ep - em) * c * s;
  }
  return D;
}

CovarianceMatrix covariance_in_basis(const Eigen::VectorXd& r, const Eigen::VectorXd& angles,
                                     const Eigen::MatrixXcd& U) {
  if (U.rows() != U.cols()) throw DimensionError("overlap matrix must be square");
  const auto n = U.rows();
  if (r.size() < n || angles.size() < n) {
    throw DimensionError("need " + std::to_string(n) + " squeezing parameters, have " +
                         std::to_string(r.size()));
  }
  const Eigen::MatrixXd S = symplectic_from_unitary(U);
  const Eigen::MatrixXd D = rotated_squeezed_covariance(r.head(n), angles.head(n));
  Eigen::MatrixXd sigma = S.transpose() * D * S;
  return CovarianceMatrix(0.5 * (sigma + sigma.transpose()));
}

CovarianceMatrix covariance_in_basis(const SchmidtDecomposition& schmidt,
                                     const MeasurementBasis& basis) {
  if (basis.overlap.rows() != static_cast<Eigen::Index>(basis.n) || basis.n > schmidt.kept()) {
    throw DimensionError("measurement basis of " + std::to_string(basis.n) +
                         " modes does not match a decomposition with " +
                         std::to_string(schmidt.kept()) + " kept modes");
  }
  return covariance_in_basis(schmidt.r, schmidt.squeezing_angle, basis.overlap);
}

CovarianceMatrix analytic_global_phase_covariance(double delta, const Eigen::MatrixXd& U,
                                                  const Eigen::VectorXd& r) {
  if (U.rows() != U.cols()) throw DimensionError("overlap matrix must be square");
  const auto n = U.rows();
  if (r.size() < n) throw DimensionError("fewer squeezing parameters than modes");
  const double s2 = std::sin(delta) * std::sin(delta);
  const double c2 = std::cos(delta) * std::cos(delta);
  const double cs = std::cos(delta) * std::sin(delta);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double ep = std::exp(2.0 * r(a));
    const double em = std::exp(-2.0 * r(a));
    const double bqq = ep + (em - ep) * s2;
    const double bpp = ep + (em - ep) * c2;
    const double bqp = (ep - em) * cs;
    const Eigen::MatrixXd w = U.row(a).transpose() * U.row(a);
    sigma.topLeftCorner(n, n) += bqq * w;
    sigma.bottomRightCorner(n, n) += bpp * w;
    sigma.topRightCorner(n, n) += bqp * w;
    sigma.bottomLeftCorner(n, n) += bqp * w;
  }
  return CovarianceMatrix(std::move(sigma));
}

CovarianceMatrix analytic_global_phase_covariance(double delta, const Eigen::MatrixXcd& U,
                                                  const Eigen::VectorXd& r) {
  if (U.size() > 0 && U.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("the closed-form global-phase covariance requires a real overlap matrix");
  }
  return analytic_global_phase_covariance(delta, Eigen::MatrixXd(U.real()), r);
}

}  // namespace cvqrc::optics
