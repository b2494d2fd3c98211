#ifndef CVQRC_HARNESS_CONFIG_HPP
#define CVQRC_HARNESS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "cvqrc/error.hpp"

namespace cvqrc::harness {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
const char* library_version() noexcept;

// Parses a JSON file; throws ConfigError naming the path.
Json load_json(const std::filesystem::path& path);

// FNV-1a of the canonical serialisation (object keys sorted), as 16 hex
// digits. Key order in the source file does not matter.
std::string config_hash(const Json& config);

// Directories searched for shipped data, in order: $CVQRC_DATA_DIR, the
// source tree, the install prefix.
std::vector<std::filesystem::path> data_directories();

// Resolves `ref` as an existing path (absolute or relative to `base_dir`),
// else as <data>/<subdir>/<ref>.json. Throws ConfigError naming `key` and
// the reference when nothing matches.
std::filesystem::path resolve_resource(const std::string& ref, std::string_view subdir,
                                       const std::filesystem::path& base_dir, const std::string& key);

// Typed access with errors that name the offending key.
template <class T>
T required(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError("missing key '" + key + "'", key);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError("key '" + key + "' has the wrong type: " + e.what(), key);
  }
}

template <class T>
T optional_or(const Json& j, const std::string& key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  return required<T>(j, key);
}

Eigen::VectorXd vector_from_json(const Json& j, const std::string& key);
Eigen::MatrixXd matrix_from_json(const Json& j, const std::string& key);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const Eigen::MatrixXd& m);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_CONFIG_HPP
