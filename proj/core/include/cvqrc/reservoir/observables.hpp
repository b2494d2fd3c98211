#ifndef CVQRC_RESERVOIR_OBSERVABLES_HPP
#define CVQRC_RESERVOIR_OBSERVABLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvqrc/optics/covariance.hpp"

namespace cvqrc::reservoir {

// Covariance element (i, j), i <= j, over the 2n quadratures in grouped
// ordering [q_1..q_n, p_1..p_n].
struct Element {
  std::size_t i = 0;
  std::size_t j = 0;
  bool operator==(const Element&) const = default;
};

class ObservableSelection {
 public:
  ObservableSelection(std::size_t modes, std::vector<Element> elements);

  // {<dq_k^2>, <dp_k^2>, <dq_k dp_k>} of one mode (0-based `mode`).
  static ObservableSelection single_mode(std::size_t modes, std::size_t mode = 0);
  // Every upper-triangular element: n(2n+1) observables.
  static ObservableSelection all_unique(std::size_t modes);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  // Labels such as "q1q1", "q1p2".
  std::string name(std::size_t index) const;
  // Position of `element` in the list; throws ConfigError if absent.
  std::size_t index_of(Element element) const;

  Eigen::VectorXd extract(const optics::CovarianceMatrix& sigma) const;

 private:
  std::size_t modes_;
  std::vector<Element> elements_;
};

// Affine map of each observable onto [0, 1] from known extremes, or the
// identity for raw observables.
class Normalizer {
 public:
  static Normalizer identity(std::size_t size);
  // Throws DomainError naming the first observable whose range vanishes.
  static Normalizer from_range(Eigen::VectorXd lo, Eigen::VectorXd hi,
                               const ObservableSelection& selection);
  // Column-wise extremes of a calibration batch (rows are samples).
  static Normalizer from_batch(const Eigen::MatrixXd& samples, const ObservableSelection& selection);
  // Exact extremes over all global pump phases of the closed-form covariance
  // with real overlap U and squeezing r. Each element has the form
  // a + b cos 2d + c sin 2d, so three evaluations fix it.
  static Normalizer global_phase(const Eigen::MatrixXd& U, const Eigen::VectorXd& r,
                                 const ObservableSelection& selection);

  bool is_identity() const noexcept { return identity_; }
  const Eigen::VectorXd& lower() const noexcept { return lo_; }
  const Eigen::VectorXd& upper() const noexcept { return hi_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& raw) const;

 private:
  bool identity_ = true;
  Eigen::VectorXd lo_;
  Eigen::VectorXd hi_;
};

Eigen::VectorXd observables_from_covariance(const optics::CovarianceMatrix& sigma,
                                            const ObservableSelection& selection,
                                            const Normalizer& normalizer);

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_OBSERVABLES_HPP
