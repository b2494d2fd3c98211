#include "cvqrc/harness/records.hpp"

#include <cmath>
#include <fstream>
#include <map>

namespace cvqrc::harness {

namespace fs = std::filesystem;

Json to_json(const MetricRecord& r) {
  return Json{{"task", r.task},     {"preset", r.preset},           {"seed", r.seed},
              {"metric", r.metric}, {"value", r.value},             {"config_hash", r.config_hash},
              {"version", r.version}};
}

MetricRecord record_from_json(const Json& j) {
  MetricRecord r;
  r.task = required<std::string>(j, "task");
  r.preset = required<std::string>(j, "preset");
  r.seed = required<std::uint64_t>(j, "seed");
  r.metric = required<std::string>(j, "metric");
  r.value = required<double>(j, "value");
  r.config_hash = required<std::string>(j, "config_hash");
  r.version = required<int>(j, "version");
  return r;
}

std::vector<MetricRecord> records_for(const ExperimentConfig& config, const SeedOutcome& outcome) {
  std::vector<MetricRecord> out;
  for (const auto& [name, value] : outcome.metrics) {
    out.push_back({to_string(config.task), config.preset, outcome.seed, name, value, config.hash,
                   kSchemaVersion});
  }
  return out;
}

void write_metrics(const fs::path& path, const std::vector<MetricRecord>& records) {
  Json doc = Json::array();
  for (const auto& r : records) doc.push_back(to_json(r));
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

std::vector<MetricRecord> read_metrics(const fs::path& path) {
  const Json doc = load_json(path);
  if (!doc.is_array()) throw ConfigError(path.string() + " is not a metrics array");
  std::vector<MetricRecord> out;
  for (const auto& j : doc) out.push_back(record_from_json(j));
  return out;
}

std::vector<MetricSummary> summarize(const std::vector<MetricRecord>& records) {
  std::vector<MetricSummary> out;
  std::map<std::string, std::vector<double>> values;
  for (const auto& r : records) {
    if (!values.count(r.metric)) out.push_back({r.metric, 0.0, 0.0, 0});
    values[r.metric].push_back(r.value);
  }
  for (auto& s : out) {
    const auto& v = values[s.metric];
    s.count = v.size();
    double sum = 0.0;
    for (double x : v) sum += x;
    s.mean = sum / static_cast<double>(v.size());
    if (v.size() > 1) {
      double ss = 0.0;
      for (double x : v) ss += (x - s.mean) * (x - s.mean);
      s.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
  }
  return out;
}

Json to_json(const RunRecord& run) {
  Json metrics = Json::array();
  for (const auto& r : run.metrics) metrics.push_back(to_json(r));
  return Json{{"config_hash", run.config_hash}, {"version", run.version},
              {"metrics", metrics},             {"artifacts", run.artifacts},
              {"timing", run.timing}};
}

void write_run_record(const fs::path& path, const RunRecord& run) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << to_json(run).dump(2) << '\n';
}

}  // namespace cvqrc::harness
