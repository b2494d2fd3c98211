#ifndef CVQRC_ERROR_HPP
#define CVQRC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cvqrc {

// Input outside the domain of a physical formula (Sellmeier radicand,
// vanishing denominators, no quasi-phase-matching solution).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inconsistent vector/matrix sizes between cooperating objects.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad or missing configuration. `key()` names the offending entry when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message, std::string key = {})
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// A simulated trajectory left its admissible range.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvqrc

#endif  // CVQRC_ERROR_HPP
