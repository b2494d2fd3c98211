#ifndef CVQRC_RESERVOIR_KERNEL_QUALITY_HPP
#define CVQRC_RESERVOIR_KERNEL_QUALITY_HPP

#include <cstddef>

#include <Eigen/Dense>

namespace cvqrc::reservoir {

// Rank of the observable matrix (rows are steps, columns observables) after
// standardising every column: the number of singular values above `eps`.
// Columns whose spread is below 1e-10 relative to their magnitude are
// dropped and contribute nothing.
std::size_t kernel_quality(const Eigen::MatrixXd& observables, double eps = 1e-4);

}  // namespace cvqrc::reservoir

#endif  // CVQRC_RESERVOIR_KERNEL_QUALITY_HPP
