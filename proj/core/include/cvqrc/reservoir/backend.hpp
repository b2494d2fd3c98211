#ifndef CVQRC_RESERVOIR_BACKEND_HPP
#define CVQRC_RESERVOIR_BACKEND_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "cvqrc/optics/covariance.hpp"
#include "cvqrc/optics/pipeline.hpp"

namespace cvqrc::reservoir {

// Maps pump-segment phases to the frexel covariance matrix.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string name() const = 0;
  virtual std::size_t segments() const = 0;
  virtual std::size_t modes() const = 0;
  virtual optics::CovarianceMatrix covariance(std::span<const double> phases) const = 0;
};

// Closed-form covariance for one global pump phase and a real overlap matrix.
class AnalyticBackend final : public Backend {
 public:
  AnalyticBackend(Eigen::MatrixXd overlap, Eigen::VectorXd r);
  // Single mode measured in its own supermode basis.
  static std::shared_ptr<const AnalyticBackend> single_mode(double r = optics::kDefaultSqueezingScale);
  // Overlap and squeezing of the twin at zero phase; throws DomainError if
  // the twin has more than one segment or a complex overlap.
  static std::shared_ptr<const AnalyticBackend> from_twin(const optics::DigitalTwin& twin);

  std::string name() const override { return "analytic"; }
  std::size_t segments() const override { return 1; }
  std::size_t modes() const override { return static_cast<std::size_t>(overlap_.rows()); }
  optics::CovarianceMatrix covariance(std::span<const double> phases) const override;

  const Eigen::MatrixXd& overlap() const noexcept { return overlap_; }
  const Eigen::VectorXd& squeezing() const noexcept { return r_; }

 private:
  Eigen::MatrixXd overlap_;
  Eigen::VectorXd r_;
};

// Full JSA -> SVD -> frexel pipeline.
class PipelineBackend final : public Backend {
 public:
  explicit PipelineBackend(std::shared_ptr<const optics::DigitalTwin> twin);

  std::string name() const override { return "pipeline"; }
  std::size_t segments() const override { return twin_->segments(); }
  std::size_t modes() const override { return twin_->modes(); }
  optics::CovarianceMatrix covariance(std::span<const double> phases) const override;

  const optics::DigitalTwin& twin() const noexcept { return *twin_; }

 private:
  std::shared_ptr<const optics::DigitalTwin> twin_;
};

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_BACKEND_HPP
