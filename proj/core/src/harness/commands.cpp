#include "cvqrc/harness/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "cvqrc/harness/csv.hpp"
#include "cvqrc/optics/jsa.hpp"
#include "cvqrc/optics/schmidt.hpp"

namespace cvqrc::harness {

namespace fs = std::filesystem;

namespace {

void print_summary(std::ostream& os, const std::string& title, const std::vector<MetricRecord>& records) {
  os << title << '\n';
  for (const auto& s : summarize(records)) {
    os << "  " << std::left << std::setw(18) << s.metric << std::right << std::fixed
       << std::setprecision(4) << s.mean << " +- " << s.stddev << "  (" << s.count << " seeds)\n";
  }
  os.unsetf(std::ios::fixed);
}

CsvTable outcome_table(const ExperimentConfig& config, const SeedOutcome& o) {
  CsvTable t;
  if (config.task == Task::kernel_quality) {
    t.header = {"step", "reservoir", "observable", "value"};
    for (Eigen::Index k = 0; k < o.prediction.rows(); ++k) {
      for (Eigen::Index m = 0; m < o.prediction.cols(); ++m) {
        t.rows.push_back({std::to_string(k), "0", std::to_string(m), format_number(o.prediction(k, m))});
      }
    }
    return t;
  }
  t.header = {"step", "channel", "prediction", "target"};
  for (Eigen::Index k = 0; k < o.prediction.rows(); ++k) {
    for (Eigen::Index c = 0; c < o.prediction.cols(); ++c) {
      t.rows.push_back({std::to_string(k), std::to_string(c), format_number(o.prediction(k, c)),
                        format_number(o.target(k, c))});
    }
  }
  return t;
}

}  // namespace

ExperimentConfig apply_overrides(const ExperimentConfig& config, const Overrides& overrides) {
  if (!overrides.seeds && !overrides.backend) return config;
  Json j = config.source;
  if (overrides.seeds) {
    if (overrides.seeds->empty()) throw ConfigError("seed list is empty", "seeds");
    j.erase("seed");
    j["seeds"] = *overrides.seeds;
  }
  if (overrides.backend) j["backend"] = *overrides.backend;
  return parse_experiment(j, config.base_dir);
}

JsaReport cmd_jsa(const Json& config, const fs::path& base_dir, const fs::path& out_dir,
                  std::ostream* log) {
  auto setup = parse_jsa_setup(config, base_dir);
  setup.crystal = optics::with_degenerate_poling(setup.crystal, 2.0 * setup.pump.center_m);
  const auto grid = optics::SpectralGrid::centered(setup.grid_center_m, setup.grid_half_span_m,
                                                   setup.grid_points);
  const auto jsa = optics::build_jsa(setup.pump, setup.crystal, grid, grid);
  const std::size_t kept = std::min(setup.kept, optics::numerical_rank(
      Eigen::BDCSVD<Eigen::MatrixXcd>(jsa.values).singularValues()));
  const auto schmidt = optics::schmidt_decompose(jsa, kept, setup.r_scale);

  fs::create_directories(out_dir);
  JsaReport report;
  report.jsa_csv = out_dir / "jsa_magnitude.csv";
  report.spectrum_csv = out_dir / "schmidt_spectrum.csv";
  report.modes_csv = out_dir / "mode_profiles.csv";

  CsvTable j{{"signal_m", "idler_m", "magnitude"}, {}};
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = 0; b < grid.size(); ++b) {
      j.rows.push_back({format_number(grid[a]), format_number(grid[b]),
                        format_number(std::abs(jsa.values(static_cast<Eigen::Index>(a),
                                                          static_cast<Eigen::Index>(b))))});
    }
  }
  write_csv(report.jsa_csv, j);

  CsvTable s{{"k", "singular_value", "weight", "r"}, {}};
  double sum_sq_weights = 0.0;
  const auto& spec = schmidt.spectrum;
  for (Eigen::Index k = 0; k < spec.size(); ++k) {
    const double w = spec(k) * spec(k);
    report.weight_sum += w;
    sum_sq_weights += w * w;
    if (spec(k) > 0.01 * spec(0)) ++report.modes_above_one_percent;
    s.rows.push_back({std::to_string(k + 1), format_number(spec(k)), format_number(w),
                      format_number(setup.r_scale * spec(k) / spec(0))});
  }
  report.schmidt_number = 1.0 / sum_sq_weights;
  write_csv(report.spectrum_csv, s);

  CsvTable m{{"wavelength_m", "mode", "real", "imag"}, {}};
  for (Eigen::Index k = 0; k < schmidt.modes_signal.cols(); ++k) {
    for (std::size_t a = 0; a < grid.size(); ++a) {
      const auto v = schmidt.modes_signal(static_cast<Eigen::Index>(a), k);
      m.rows.push_back({format_number(grid[a]), std::to_string(k + 1), format_number(v.real()),
                        format_number(v.imag())});
    }
  }
  write_csv(report.modes_csv, m);

  if (log) {
    *log << "crystal " << setup.crystal.name << ", L = " << setup.crystal.length_m << " m";
    if (setup.crystal.poling_period_m) *log << ", poling period " << *setup.crystal.poling_period_m << " m";
    *log << "\nmodes above 1% of the largest: " << report.modes_above_one_percent
         << "\nSchmidt number: " << report.schmidt_number
         << "\nsum of Schmidt weights: " << report.weight_sum << '\n';
  }
  return report;
}

RunRecord cmd_run_task(const ExperimentConfig& config, const fs::path& out_dir, std::ostream* log) {
  fs::create_directories(out_dir);
  RunRecord run;
  run.config_hash = config.hash;
  const auto started = std::chrono::system_clock::now();
  const auto t0 = std::chrono::steady_clock::now();
  Json per_seed = Json::object();
  for (const auto seed : config.seeds) {
    const auto s0 = std::chrono::steady_clock::now();
    const auto outcome = run_seed(config, seed);
    per_seed[std::to_string(seed)] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    const auto records = records_for(config, outcome);
    run.metrics.insert(run.metrics.end(), records.begin(), records.end());
    const auto name = (config.task == Task::kernel_quality ? "observables_seed" : "predictions_seed") +
                      std::to_string(seed) + ".csv";
    write_csv(out_dir / name, outcome_table(config, outcome));
    run.artifacts.push_back(name);
  }
  write_metrics(out_dir / "metrics.json", run.metrics);
  run.artifacts.insert(run.artifacts.begin(), "metrics.json");
  const auto started_t = std::chrono::system_clock::to_time_t(started);
  std::ostringstream stamp;
  stamp << std::put_time(std::gmtime(&started_t), "%Y-%m-%dT%H:%M:%SZ");
  run.timing = {{"started_utc", stamp.str()},
                {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
                {"seed_seconds", per_seed}};
  write_run_record(out_dir / "run.json", run);
  if (log) {
    print_summary(*log, std::string(to_string(config.task)) + " / " + config.preset + " / noise " +
                            config.noise_label + " / " + config.backend, run.metrics);
  }
  return run;
}

SweepSpec parse_sweep(const Json& j) {
  if (!j.is_object() || !j.contains("sweep")) throw ConfigError("config has no 'sweep' section", "sweep");
  const Json& s = j.at("sweep");
  SweepSpec spec;
  spec.axis = required<std::string>(s, "axis");
  if (!is_sweep_axis(spec.axis)) {
    throw ConfigError("unknown sweep axis '" + spec.axis +
                      "' (expected train_size, tau, R, n, N or noise)", "sweep.axis");
  }
  if (!s.contains("values") || !s.at("values").is_array() || s.at("values").empty()) {
    throw ConfigError("sweep needs a non-empty 'values' list", "sweep.values");
  }
  for (const auto& v : s.at("values")) spec.values.push_back(v);
  spec.presets = optional_or<std::vector<std::string>>(s, "presets", {});
  return spec;
}

fs::path cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep, const fs::path& out_dir,
                   std::ostream* log) {
  fs::create_directories(out_dir);
  CsvTable table{{"preset", "axis", "axis_value", "seed", "metric", "value"}, {}};
  std::vector<MetricRecord> all;
  std::vector<std::string> presets = sweep.presets;
  if (presets.empty()) presets.push_back(config.preset);
  // Validate every grid point before spending time on any of them.
  std::vector<ExperimentConfig> points;
  for (const auto& preset : presets) {
    Json j = config.source;
    j["preset"] = preset;
    const auto base = parse_experiment(j, config.base_dir);
    for (const auto& value : sweep.values) points.push_back(with_axis_value(base, sweep.axis, value));
  }
  std::size_t idx = 0;
  for (const auto& preset : presets) {
    for (const auto& value : sweep.values) {
      const auto& point = points[idx++];
      const std::string label = value.is_string() ? value.get<std::string>() : value.dump();
      std::vector<MetricRecord> point_records;
      for (const auto seed : point.seeds) {
        const auto records = records_for(point, run_seed(point, seed));
        for (const auto& r : records) {
          table.rows.push_back({preset, sweep.axis, label, std::to_string(seed), r.metric,
                                format_number(r.value)});
        }
        point_records.insert(point_records.end(), records.begin(), records.end());
      }
      if (log) print_summary(*log, preset + " " + sweep.axis + " = " + label, point_records);
      all.insert(all.end(), point_records.begin(), point_records.end());
    }
  }
  const auto path = out_dir / "sweep.csv";
  write_csv(path, table);
  write_metrics(out_dir / "metrics.json", all);
  return path;
}

reservoir::NoiseModel cmd_fit_noise(const std::vector<fs::path>& traces, const fs::path& out_file,
                                    std::ostream* log) {
  if (traces.empty()) throw ConfigError("no trace files given", "traces");
  // point -> observable -> repetitions (and model value)
  std::map<std::string, std::map<std::string, std::vector<double>>> values;
  std::map<std::string, std::map<std::string, double>> model;
  std::vector<std::string> points;
  std::vector<std::string> observables;
  bool has_model = true;
  for (const auto& path : traces) {
    const auto t = read_csv(path);
    const auto cp = t.column("point");
    const auto co = t.column("observable");
    const auto cv = t.column("value");
    const bool m = t.has_column("model");
    has_model = has_model && m;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const auto& p = t.rows[r][cp];
      const auto& o = t.rows[r][co];
      if (!values.count(p)) points.push_back(p);
      if (std::find(observables.begin(), observables.end(), o) == observables.end()) {
        observables.push_back(o);
      }
      values[p][o].push_back(t.number(r, cv));
      if (m) model[p][o] = t.number(r, t.column("model"));
    }
  }
  std::vector<Eigen::MatrixXd> reps;
  Eigen::MatrixXd mean(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(observables.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& per_obs = values[points[p]];
    const std::size_t count = per_obs.count(observables[0]) ? per_obs.at(observables[0]).size() : 0;
    Eigen::MatrixXd block(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(observables.size()));
    for (std::size_t o = 0; o < observables.size(); ++o) {
      const auto it = per_obs.find(observables[o]);
      if (it == per_obs.end() || it->second.size() != count) {
        throw ConfigError("point '" + points[p] + "' has unequal repetition counts across observables",
                          "traces");
      }
      for (std::size_t k = 0; k < count; ++k) {
        block(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(o)) = it->second[k];
      }
      if (has_model) {
        mean(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(o)) = model[points[p]][observables[o]];
      }
    }
    reps.push_back(std::move(block));
  }
  const auto fitted = has_model ? reservoir::fit_noise(reps, mean) : reservoir::fit_noise(reps);

  Json doc{{"kind", "noise"},
           {"description", "Least-squares fit over " + std::to_string(points.size()) + " phase points" +
                               (has_model ? " about the model mean" : " about per-point sample means")},
           {"stddev", to_json(fitted.stddev)},
           {"observables", observables}};
  if (out_file.has_parent_path()) fs::create_directories(out_file.parent_path());
  std::ofstream out(out_file);
  if (!out) throw ConfigError("cannot write " + out_file.string());
  out << doc.dump(2) << '\n';
  if (log) {
    for (std::size_t o = 0; o < observables.size(); ++o) {
      *log << observables[o] << ": " << fitted.stddev(static_cast<Eigen::Index>(o)) << '\n';
    }
  }
  return fitted;
}

}  // namespace cvqrc::harness
