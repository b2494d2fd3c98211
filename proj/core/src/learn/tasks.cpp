#include "cvqrc/learn/tasks.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cvqrc/error.hpp"
#include "cvqrc/rng.hpp"

namespace cvqrc::learn {

namespace {

TaskDataset with_default_split(TaskDataset d) {
  const std::size_t n = d.length();
  d.split = d.washout + (n - d.washout) * 2 / 3;
  return d;
}

std::vector<double> random_bits(std::size_t length, std::uint64_t seed) {
  auto rng = make_rng(seed, "task/bits");
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<double> out(length);
  for (auto& b : out) b = bit(rng);
  return out;
}

}  // namespace

void TaskDataset::set_training_size(std::size_t train, std::size_t warmup) {
  const std::size_t start = std::max(washout, warmup);
  if (train == 0 || start + train >= length()) {
    throw DimensionError("training size " + std::to_string(train) + " after " +
                         std::to_string(start) + " washout steps leaves no test data in a sequence of " +
                         std::to_string(length()));
  }
  split = start + train;
}

TaskDataset parity_dataset(std::span<const double> bits, std::size_t tau) {
  if (tau == 0) throw ConfigError("parity order must be at least 1", "tau");
  if (bits.size() <= tau) throw DimensionError("sequence too short for the parity order");
  TaskDataset d;
  const auto n = static_cast<Eigen::Index>(bits.size());
  d.inputs.resize(n, 1);
  d.targets = Eigen::MatrixXd::Zero(n, 1);
  for (Eigen::Index k = 0; k < n; ++k) d.inputs(k, 0) = bits[static_cast<std::size_t>(k)];
  for (std::size_t k = tau; k < bits.size(); ++k) {
    int acc = 0;
    for (std::size_t j = 0; j <= tau; ++j) acc ^= bits[k - j] > 0.5 ? 1 : 0;
    d.targets(static_cast<Eigen::Index>(k), 0) = acc;
  }
  d.washout = tau;
  return with_default_split(std::move(d));
}

TaskDataset memory_dataset(std::span<const double> inputs, std::size_t tau) {
  if (inputs.size() <= tau) throw DimensionError("sequence too short for the delay");
  TaskDataset d;
  const auto n = static_cast<Eigen::Index>(inputs.size());
  d.inputs.resize(n, 1);
  d.targets = Eigen::MatrixXd::Zero(n, 1);
  for (Eigen::Index k = 0; k < n; ++k) d.inputs(k, 0) = inputs[static_cast<std::size_t>(k)];
  for (std::size_t k = tau; k < inputs.size(); ++k) {
    d.targets(static_cast<Eigen::Index>(k), 0) = inputs[k - tau];
  }
  d.washout = tau;
  return with_default_split(std::move(d));
}

TaskDataset gen_xor(std::size_t length, std::uint64_t seed) {
  if (length < 2) throw ConfigError("XOR sequence needs at least two steps", "length");
  return parity_dataset(random_bits(length, seed), 1);
}

TaskDataset gen_parity(std::size_t length, std::size_t tau, std::uint64_t seed) {
  return parity_dataset(random_bits(length, seed), tau);
}

TaskDataset gen_memory(std::size_t length, std::size_t tau, std::uint64_t seed) {
  auto rng = make_rng(seed, "task/memory");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> s(length);
  for (auto& x : s) x = u(rng);
  return memory_dataset(s, tau);
}

}  // namespace cvqrc::learn
