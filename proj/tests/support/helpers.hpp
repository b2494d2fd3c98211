#ifndef CVQRC_TESTS_HELPERS_HPP
#define CVQRC_TESTS_HELPERS_HPP

#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace cvqrc::testing {

// Haar-ish random unitary from the QR decomposition of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

inline Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  return q;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cvqrc_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace cvqrc::testing

#endif  // CVQRC_TESTS_HELPERS_HPP
