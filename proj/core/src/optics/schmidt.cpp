#include "cvqrc/optics/schmidt.hpp"

#include <complex>
#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

std::size_t numerical_rank(const Eigen::VectorXd& singular_values, double tol) {
  if (singular_values.size() == 0 || !(singular_values(0) > 0.0)) return 0;
  const double cut = tol * singular_values(0);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < singular_values.size(); ++k) {
    if (singular_values(k) > cut) ++rank;
  }
  return rank;
}

SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa, std::size_t n_kept,
                                       double r_scale) {
  if (n_kept == 0) throw DomainError("at least one Schmidt mode must be kept");
  if (!(r_scale >= 0.0)) throw DomainError("squeezing scale must be non-negative");
  const auto& J = jsa.values;
  const auto min_dim = static_cast<std::size_t>(std::min(J.rows(), J.cols()));
  if (n_kept > min_dim) {
    throw DomainError("cannot keep " + std::to_string(n_kept) + " Schmidt modes on a " +
                      std::to_string(J.rows()) + "x" + std::to_string(J.cols()) + " grid");
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const std::size_t rank = numerical_rank(s);
  if (n_kept > rank) {
    throw DomainError("requested " + std::to_string(n_kept) + " Schmidt modes but the JSA has "
                      "numerical rank " + std::to_string(rank));
  }

  const auto n = static_cast<Eigen::Index>(n_kept);
  Eigen::MatrixXcd u = svd.matrixU().leftCols(n);
  Eigen::MatrixXcd v = svd.matrixV().leftCols(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index arg = 0;
    u.col(k).cwiseAbs().maxCoeff(&arg);
    const std::complex<double> phase = u(arg, k) / std::abs(u(arg, k));
    u.col(k) /= phase;
    v.col(k) /= phase;
  }

  SchmidtDecomposition out{jsa.signal, jsa.idler, s, {}, {}, {}, Eigen::VectorXd::Zero(n)};
  const double norm = s.norm();
  if (norm > 0.0) out.spectrum /= norm;
  out.r = r_scale * s.head(n) / s(0);
  out.modes_signal = u / std::sqrt(jsa.signal.spacing());
  // J = U S V^H, so the idler mode paired with u_k is conj(v_k).
  out.modes_idler = v.conjugate() / std::sqrt(jsa.idler.spacing());
  if (jsa.signal == jsa.idler) {
    for (Eigen::Index k = 0; k < n; ++k) {
      out.squeezing_angle(k) = std::arg(u.col(k).dot(v.col(k).conjugate()));
    }
  }
  return out;
}

}  // namespace cvqrc::optics
