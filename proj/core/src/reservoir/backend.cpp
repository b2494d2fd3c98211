#include "cvqrc/reservoir/backend.hpp"

#include <string>

#include "cvqrc/error.hpp"

namespace cvqrc::reservoir {

AnalyticBackend::AnalyticBackend(Eigen::MatrixXd overlap, Eigen::VectorXd r)
    : overlap_(std::move(overlap)), r_(std::move(r)) {
  if (overlap_.rows() == 0 || overlap_.rows() != overlap_.cols()) {
    throw DimensionError("analytic backend needs a square, non-empty overlap matrix");
  }
  if (r_.size() < overlap_.rows()) throw DimensionError("fewer squeezing parameters than modes");
}

std::shared_ptr<const AnalyticBackend> AnalyticBackend::single_mode(double r) {
  return std::make_shared<const AnalyticBackend>(Eigen::MatrixXd::Identity(1, 1),
                                                 Eigen::VectorXd::Constant(1, r));
}

std::shared_ptr<const AnalyticBackend> AnalyticBackend::from_twin(const optics::DigitalTwin& twin) {
  if (twin.segments() != 1) {
    throw DomainError("the analytic backend models a single global pump phase, the twin has " +
                      std::to_string(twin.segments()) + " segments");
  }
  const auto& basis = twin.reference_basis();
  if (!basis.is_real(1e-9)) {
    throw DomainError("the analytic backend requires a real overlap matrix");
  }
  return std::make_shared<const AnalyticBackend>(Eigen::MatrixXd(basis.overlap.real()),
                                                 twin.reference().r);
}

optics::CovarianceMatrix AnalyticBackend::covariance(std::span<const double> phases) const {
  if (phases.size() != 1) {
    throw DimensionError("analytic backend takes one phase, got " + std::to_string(phases.size()));
  }
  return optics::analytic_global_phase_covariance(phases[0], overlap_, r_);
}

PipelineBackend::PipelineBackend(std::shared_ptr<const optics::DigitalTwin> twin)
    : twin_(std::move(twin)) {
  if (!twin_) throw ConfigError("pipeline backend needs a digital twin");
}

optics::CovarianceMatrix PipelineBackend::covariance(std::span<const double> phases) const {
  return twin_->covariance(phases);
}

}  // namespace cvqrc::reservoir
