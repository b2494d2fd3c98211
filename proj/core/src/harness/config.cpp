#include "cvqrc/harness/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cvqrc/rng.hpp"

#ifndef CVQRC_SOURCE_DATA_DIR
#define CVQRC_SOURCE_DATA_DIR ""
#endif
#ifndef CVQRC_INSTALL_DATA_DIR
#define CVQRC_INSTALL_DATA_DIR ""
#endif
#ifndef CVQRC_VERSION
#define CVQRC_VERSION "0.0.0"
#endif

namespace cvqrc::harness {

namespace fs = std::filesystem;

const char* library_version() noexcept { return CVQRC_VERSION; }

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string(), path.string());
  try {
    return Json::parse(in, nullptr, true, true);
  } catch (const Json::exception& e) {
    throw ConfigError("malformed JSON in " + path.string() + ": " + e.what(), path.string());
  }
}

std::string config_hash(const Json& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(config.dump())));
  return buf;
}

std::vector<fs::path> data_directories() {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("CVQRC_DATA_DIR"); env && *env) dirs.emplace_back(env);
  for (const char* d : {CVQRC_SOURCE_DATA_DIR, CVQRC_INSTALL_DATA_DIR}) {
    if (*d) dirs.emplace_back(d);
  }
  return dirs;
}

fs::path resolve_resource(const std::string& ref, std::string_view subdir, const fs::path& base_dir,
                          const std::string& key) {
  if (ref.empty()) throw ConfigError("empty reference for '" + key + "'", key);
  const fs::path p(ref);
  if (p.is_absolute()) {
    if (fs::exists(p)) return p;
    throw ConfigError("file not found for '" + key + "': " + p.string(), key);
  }
  if (fs::exists(base_dir / p) && fs::is_regular_file(base_dir / p)) return base_dir / p;
  for (const auto& dir : data_directories()) {
    for (const fs::path& candidate : {dir / subdir / (ref + ".json"), dir / subdir / ref, dir / p}) {
      if (fs::exists(candidate) && fs::is_regular_file(candidate)) return candidate;
    }
  }
  throw ConfigError("cannot resolve '" + ref + "' for key '" + key + "' (looked in " +
                    (base_dir / p).string() + " and the data directories)", key);
}

Eigen::VectorXd vector_from_json(const Json& j, const std::string& key) {
  const auto v = required<std::vector<double>>(j, key);
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::MatrixXd matrix_from_json(const Json& j, const std::string& key) {
  const auto rows = required<std::vector<std::vector<double>>>(j, key);
  if (rows.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw ConfigError("ragged matrix in '" + key + "'", key);
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

Json to_json(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

Json to_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

}  // namespace cvqrc::harness
