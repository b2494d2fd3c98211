#include "cvqrc/reservoir/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvqrc/error.hpp"

namespace cvqrc::reservoir {

ObservableSelection::ObservableSelection(std::size_t modes, std::vector<Element> elements)
    : modes_(modes), elements_(std::move(elements)) {
  if (modes_ == 0) throw ConfigError("observable selection needs at least one mode", "modes");
  if (elements_.empty()) throw ConfigError("observable selection is empty", "observables");
  if (elements_.size() > modes_ * (2 * modes_ + 1)) {
    throw ConfigError("more observables than unique covariance elements", "observables");
  }
  for (const auto& e : elements_) {
    if (e.i > e.j || e.j >= 2 * modes_) {
      throw ConfigError("covariance element (" + std::to_string(e.i) + ", " +
                        std::to_string(e.j) + ") out of range for " + std::to_string(modes_) +
                        " modes", "observables");
    }
  }
}

ObservableSelection ObservableSelection::single_mode(std::size_t modes, std::size_t mode) {
  if (mode >= modes) throw ConfigError("mode index out of range", "mode");
  return ObservableSelection(modes, {{mode, mode}, {mode + modes, mode + modes}, {mode, mode + modes}});
}

ObservableSelection ObservableSelection::all_unique(std::size_t modes) {
  std::vector<Element> elements;
  for (std::size_t i = 0; i < 2 * modes; ++i) {
    for (std::size_t j = i; j < 2 * modes; ++j) elements.push_back({i, j});
  }
  return ObservableSelection(modes, std::move(elements));
}

std::string ObservableSelection::name(std::size_t index) const {
  const auto label = [this](std::size_t k) {
    return (k < modes_ ? "q" : "p") + std::to_string(k % modes_ + 1);
  };
  const auto& e = elements_.at(index);
  return label(e.i) + label(e.j);
}

std::size_t ObservableSelection::index_of(Element element) const {
  const auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) {
    throw ConfigError("covariance element (" + std::to_string(element.i) + ", " +
                      std::to_string(element.j) + ") is not selected", "observables");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

Eigen::VectorXd ObservableSelection::extract(const optics::CovarianceMatrix& sigma) const {
  if (sigma.modes() != modes_) {
    throw DimensionError("covariance has " + std::to_string(sigma.modes()) +
                         " modes, selection expects " + std::to_string(modes_));
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(elements_.size()));
  for (std::size_t m = 0; m < elements_.size(); ++m) {
    out(static_cast<Eigen::Index>(m)) = sigma(static_cast<Eigen::Index>(elements_[m].i),
                                              static_cast<Eigen::Index>(elements_[m].j));
  }
  return out;
}

Normalizer Normalizer::identity(std::size_t size) {
  Normalizer n;
  n.lo_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
  n.hi_ = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(size));
  return n;
}

Normalizer Normalizer::from_range(Eigen::VectorXd lo, Eigen::VectorXd hi,
                                  const ObservableSelection& selection) {
  if (lo.size() != hi.size() || lo.size() != static_cast<Eigen::Index>(selection.size())) {
    throw DimensionError("normalisation extremes do not match the observable selection");
  }
  for (Eigen::Index m = 0; m < lo.size(); ++m) {
    const double scale = std::max({1.0, std::abs(lo(m)), std::abs(hi(m))});
    if (!(hi(m) - lo(m) > 1e-12 * scale)) {
      throw DomainError("observable " + selection.name(static_cast<std::size_t>(m)) +
                        " is constant; its min-max range is zero");
    }
  }
  Normalizer n;
  n.identity_ = false;
  n.lo_ = std::move(lo);
  n.hi_ = std::move(hi);
  return n;
}

Normalizer Normalizer::from_batch(const Eigen::MatrixXd& samples,
                                  const ObservableSelection& selection) {
  if (samples.rows() < 2) throw DimensionError("calibration batch needs at least two samples");
  return from_range(samples.colwise().minCoeff().transpose(),
                    samples.colwise().maxCoeff().transpose(), selection);
}

Normalizer Normalizer::global_phase(const Eigen::MatrixXd& U, const Eigen::VectorXd& r,
                                    const ObservableSelection& selection) {
  const auto f = [&](double delta) {
    return selection.extract(optics::analytic_global_phase_covariance(delta, U, r));
  };
  const Eigen::VectorXd f0 = f(0.0);
  const Eigen::VectorXd f1 = f(std::numbers::pi / 4.0);
  const Eigen::VectorXd f2 = f(std::numbers::pi / 2.0);
  const Eigen::VectorXd a = 0.5 * (f0 + f2);
  const Eigen::VectorXd b = 0.5 * (f0 - f2);
  const Eigen::VectorXd c = f1 - a;
  const Eigen::VectorXd amp = (b.array().square() + c.array().square()).sqrt();
  return from_range(a - amp, a + amp, selection);
}

Eigen::VectorXd Normalizer::apply(const Eigen::VectorXd& raw) const {
  if (raw.size() != lo_.size()) throw DimensionError("observable vector size mismatch");
  if (identity_) return raw;
  return ((raw - lo_).array() / (hi_ - lo_).array()).matrix();
}

Eigen::VectorXd observables_from_covariance(const optics::CovarianceMatrix& sigma,
                                            const ObservableSelection& selection,
                                            const Normalizer& normalizer) {
  return normalizer.apply(selection.extract(sigma));
}

}  // namespace cvqrc::reservoir
