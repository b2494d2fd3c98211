#ifndef CVQRC_HARNESS_RECORDS_HPP
#define CVQRC_HARNESS_RECORDS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cvqrc/harness/config.hpp"
#include "cvqrc/harness/experiments.hpp"

namespace cvqrc::harness {

struct MetricRecord {
  std::string task;
  std::string preset;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
  std::string config_hash;
  int version = kSchemaVersion;
};

Json to_json(const MetricRecord& record);
MetricRecord record_from_json(const Json& j);

std::vector<MetricRecord> records_for(const ExperimentConfig& config, const SeedOutcome& outcome);

// A JSON array of records. Contains no timing, so identical runs produce
// identical files.
void write_metrics(const std::filesystem::path& path, const std::vector<MetricRecord>& records);
std::vector<MetricRecord> read_metrics(const std::filesystem::path& path);

struct MetricSummary {
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single seed
  std::size_t count = 0;
};

// One entry per metric name, in order of first appearance.
std::vector<MetricSummary> summarize(const std::vector<MetricRecord>& records);

struct RunRecord {
  std::string config_hash;
  int version = kSchemaVersion;
  std::vector<MetricRecord> metrics;
  std::vector<std::string> artifacts;
  Json timing = Json::object();  // wall-clock data, kept apart from results
};

Json to_json(const RunRecord& run);
void write_run_record(const std::filesystem::path& path, const RunRecord& run);

}  // namespace cvqrc::harness

#endif  // CVQRC_HARNESS_RECORDS_HPP
