#ifndef CVQRC_LEARN_TASKS_HPP
#define CVQRC_LEARN_TASKS_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace cvqrc::learn {

// Rows are time steps. Targets before `washout` are undefined (zero) and
// ignored; rows [washout, split) train and [split, end) test.
struct TaskDataset {
  Eigen::MatrixXd inputs;
  Eigen::MatrixXd targets;
  std::size_t washout = 0;
  std::size_t split = 0;

  std::size_t length() const noexcept { return static_cast<std::size_t>(inputs.rows()); }
  // Sets split = max(washout, warmup) + train; throws DimensionError if that
  // leaves no test rows.
  void set_training_size(std::size_t train, std::size_t warmup = 0);
};

// target_k = s_k xor s_{k-1} xor ... xor s_{k-tau}, washout tau.
TaskDataset parity_dataset(std::span<const double> bits, std::size_t tau);
// target_k = s_{k-tau}, washout tau.
TaskDataset memory_dataset(std::span<const double> inputs, std::size_t tau);

// Uniform random bits; gen_parity(length, 1, seed) equals gen_xor(length, seed).
TaskDataset gen_xor(std::size_t length, std::uint64_t seed);
TaskDataset gen_parity(std::size_t length, std::size_t tau, std::uint64_t seed);
// Inputs uniform on [-1, 1].
TaskDataset gen_memory(std::size_t length, std::size_t tau, std::uint64_t seed);

}  // namespace cvqrc::learn

#endif  // CVQRC_LEARN_TASKS_HPP
