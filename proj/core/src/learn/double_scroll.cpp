#include "cvqrc/learn/double_scroll.hpp"

#include <cmath>
#include <random>
#include <string>

#include "cvqrc/error.hpp"
#include "cvqrc/rng.hpp"

namespace cvqrc::learn {

DoubleScrollState double_scroll_rhs(const DoubleScrollState& x, const DoubleScrollParams& p) {
  const double dv = x(0) - x(1);
  const double diode = dv / p.r2 + 2.0 * p.ir * std::sinh(p.beta * dv);
  return {x(0) / p.r1 - diode, diode - x(2), x(1) - p.r4 * x(2)};
}

Eigen::MatrixXd double_scroll_integrate(const DoubleScrollState& initial, std::size_t samples,
                                        double sample_dt, double dt, const DoubleScrollParams& p) {
  if (!(dt > 0.0) || dt > 0.05) throw ConfigError("integration step must lie in (0, 0.05]", "dt");
  if (!(sample_dt > 0.0)) throw ConfigError("sampling interval must be positive", "sample_dt");
  const double ratio = sample_dt / dt;
  const auto substeps = static_cast<long>(std::llround(ratio));
  if (substeps < 1 || std::abs(ratio - static_cast<double>(substeps)) > 1e-9 * ratio) {
    throw ConfigError("integration step must divide the sampling interval", "dt");
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(samples), 3);
  DoubleScrollState x = initial;
  for (std::size_t k = 0; k < samples; ++k) {
    for (long s = 0; s < substeps; ++s) {
      const DoubleScrollState k1 = double_scroll_rhs(x, p);
      const DoubleScrollState k2 = double_scroll_rhs(x + 0.5 * dt * k1, p);
      const DoubleScrollState k3 = double_scroll_rhs(x + 0.5 * dt * k2, p);
      const DoubleScrollState k4 = double_scroll_rhs(x + dt * k3, p);
      x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!x.allFinite() || x.cwiseAbs().maxCoeff() > 1e3) {
      throw DivergenceError("double-scroll trajectory diverged at sample " + std::to_string(k));
    }
    out.row(static_cast<Eigen::Index>(k)) = x.transpose();
  }
  return out;
}

Eigen::MatrixXd double_scroll_series(std::size_t length, std::uint64_t seed, std::size_t burn_in,
                                     std::size_t max_offset) {
  std::size_t offset = 0;
  if (max_offset > 0) {
    auto rng = make_rng(seed, "task/double_scroll/offset");
    offset = std::uniform_int_distribution<std::size_t>(0, max_offset - 1)(rng);
  }
  const Eigen::MatrixXd traj =
      double_scroll_integrate(DoubleScrollState(0.1, 0.2, 0.3), burn_in + offset + length);
  return traj.bottomRows(static_cast<Eigen::Index>(length));
}

ChannelScaler ChannelScaler::fit(const Eigen::MatrixXd& rows) {
  if (rows.rows() < 2) throw DimensionError("need at least two rows to fit a channel scaler");
  ChannelScaler s{rows.colwise().minCoeff(), rows.colwise().maxCoeff()};
  for (Eigen::Index c = 0; c < rows.cols(); ++c) {
    if (!(s.hi(c) > s.lo(c))) {
      throw DomainError("channel " + std::to_string(c) + " is constant and cannot be scaled");
    }
  }
  return s;
}

Eigen::MatrixXd ChannelScaler::apply(const Eigen::MatrixXd& rows) const {
  Eigen::MatrixXd out = rows.rowwise() - lo;
  out.array().rowwise() /= (hi - lo).array();
  return (2.0 * out.array() - 1.0).matrix();
}

Eigen::MatrixXd ChannelScaler::invert(const Eigen::MatrixXd& scaled) const {
  Eigen::MatrixXd out = (scaled.array() + 1.0) * 0.5;
  out.array().rowwise() *= (hi - lo).array();
  return out.rowwise() + lo;
}

}  // namespace cvqrc::learn
