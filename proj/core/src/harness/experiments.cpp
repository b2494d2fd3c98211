#include "cvqrc/harness/experiments.hpp"

#include <algorithm>
#include <random>
#include <map>
#include <set>

#include "cvqrc/learn/double_scroll.hpp"
#include "cvqrc/learn/forecast.hpp"
#include "cvqrc/learn/metrics.hpp"
#include "cvqrc/learn/readout.hpp"
#include "cvqrc/learn/tasks.hpp"
#include "cvqrc/reservoir/kernel_quality.hpp"
#include "cvqrc/rng.hpp"

namespace cvqrc::harness {

namespace fs = std::filesystem;
using reservoir::Ensemble;
using reservoir::Normalizer;
using reservoir::ObservableSelection;
using reservoir::ReservoirUnit;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct TaskDefaults {
  const char* preset;
  const char* backend;
  const char* noise;
  std::size_t segments, modes, washout, train, test;
};

TaskDefaults defaults_for(Task task) {
  switch (task) {
    case Task::xor_task: return {"xor", "analytic", "average", 1, 1, 10, 70, 49};
    case Task::parity: return {"general", "pipeline", "none", 9, 9, 50, 500, 200};
    case Task::memory: return {"memory_r5", "analytic", "average", 1, 1, 20, 200, 100};
    case Task::double_scroll: return {"double_scroll", "analytic", "average", 1, 1, 50, 350, 0};
    case Task::kernel_quality: return {"general", "pipeline", "none", 1, 1, 50, 0, 0};
  }
  return {"xor", "analytic", "none", 1, 1, 10, 70, 49};
}

void refresh_hash(ExperimentConfig& c) { c.hash = config_hash(c.source); }

std::shared_ptr<const optics::DigitalTwin> make_twin(const ExperimentConfig& c, std::size_t segments,
                                                     std::size_t modes) {
  optics::TwinConfig tc = c.twin ? *c.twin : load_twin_config(Json("twin_reservoir"), c.base_dir);
  tc.segments = segments;
  tc.modes = modes;
  return std::make_shared<const optics::DigitalTwin>(std::move(tc));
}

ObservableSelection selection_for(const ExperimentConfig& c, bool general) {
  const bool all = c.observables == "all" || (c.observables == "auto" && general);
  if (!all && c.observables != "single" && c.observables != "auto") {
    throw ConfigError("observables must be 'single', 'all' or 'auto'", "observables");
  }
  return all ? ObservableSelection::all_unique(c.modes) : ObservableSelection::single_mode(c.modes);
}

// Backend plus analytic extremes for single-segment reservoirs.
std::pair<std::shared_ptr<const reservoir::Backend>, std::shared_ptr<const reservoir::AnalyticBackend>>
global_phase_backend(const ExperimentConfig& c) {
  if (c.backend == "analytic" && c.modes == 1 && !c.twin) {
    auto a = reservoir::AnalyticBackend::single_mode();
    return {a, a};
  }
  const auto twin = make_twin(c, 1, c.modes);
  auto a = reservoir::AnalyticBackend::from_twin(*twin);
  if (c.backend == "analytic") return {a, a};
  return {std::make_shared<const reservoir::PipelineBackend>(twin), a};
}

Ensemble global_phase_ensemble(const ExperimentConfig& c, const Eigen::VectorXd& alpha,
                               const Eigen::VectorXd& beta, const Eigen::MatrixXd& mask, double v_pi2,
                               std::uint64_t seed) {
  const auto r = static_cast<std::size_t>(alpha.size());
  const auto selection = selection_for(c, false);
  const auto [backend, analytic] = global_phase_backend(c);
  const auto normalizer = Normalizer::global_phase(analytic->overlap(), analytic->squeezing(), selection);
  std::vector<ReservoirUnit> units;
  for (std::size_t k = 0; k < r; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    reservoir::EncodingParams e;
    e.alpha = alpha.segment(i, 1);
    e.beta = beta.segment(i, 1);
    e.mask = mask.row(i);
    e.v_pi2 = v_pi2;
    units.push_back({std::move(e), backend, normalizer});
  }
  const std::size_t q_index = selection.index_of({0, 0});
  return Ensemble(std::move(units), selection, c.noise, Ensemble::cross_feedback(r, q_index), seed);
}

Ensemble general_ensemble(const ExperimentConfig& c, const GeneralEncoding& g, std::uint64_t seed,
                          double input_lo, double input_hi) {
  const std::size_t n_seg = c.effective_segments();
  const auto selection = selection_for(c, true);
  std::shared_ptr<const reservoir::Backend> backend;
  const auto twin = make_twin(c, n_seg, c.modes);
  if (c.backend == "pipeline") {
    backend = std::make_shared<const reservoir::PipelineBackend>(twin);
  } else if (n_seg == 1) {
    backend = reservoir::AnalyticBackend::from_twin(*twin);
  } else {
    throw ConfigError("the analytic backend needs a single pump segment (N = 1)", "backend");
  }

  const double amp = angular_frequency(twin->config().pump_center_m) * g.delta_amp_s;
  const auto seg = static_cast<Eigen::Index>(n_seg);
  const auto d = static_cast<Eigen::Index>(selection.size());
  auto rng = make_rng(seed, "encoding/general");
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(g.mask_lo, g.mask_hi);
  reservoir::EncodingParams e;
  e.alpha.resize(seg);
  e.beta.resize(seg);
  for (Eigen::Index i = 0; i < seg; ++i) e.alpha(i) = sym(rng) * amp;
  for (Eigen::Index i = 0; i < seg; ++i) e.beta(i) = sym(rng) * amp;
  e.mask.resize(seg, d);
  for (Eigen::Index i = 0; i < seg; ++i) {
    for (Eigen::Index m = 0; m < d; ++m) e.mask(i, m) = pos(rng);
  }
  const double top = Eigen::BDCSVD<Eigen::MatrixXd>(e.mask).singularValues()(0);
  if (top > 0.0) e.mask *= g.mask_scale * amp / top;

  // Min-max extremes from random phases over the reachable box.
  const auto [lo, hi] = reservoir::reachable_phase_box(e, input_lo, input_hi);
  auto cal_rng = make_rng(seed, "calibration/reservoir/0");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd batch(static_cast<Eigen::Index>(g.calibration_samples), d);
  Eigen::VectorXd phases(seg);
  for (Eigen::Index s = 0; s < batch.rows(); ++s) {
    for (Eigen::Index i = 0; i < seg; ++i) phases(i) = lo(i) + (hi(i) - lo(i)) * unit(cal_rng);
    batch.row(s) = selection.extract(backend->covariance({phases.data(), n_seg})).transpose();
  }
  auto normalizer = Normalizer::from_batch(batch, selection);

  std::vector<ReservoirUnit> units;
  units.push_back({std::move(e), backend, std::move(normalizer)});
  return Ensemble(std::move(units), selection, c.noise, Ensemble::self_feedback(selection.size()), seed);
}

SeedOutcome supervised(const ExperimentConfig& c, const learn::TaskDataset& data, std::uint64_t seed,
                       double input_lo, double input_hi, bool binary) {
  const std::size_t start = std::max(c.washout, data.washout);
  auto ensemble = build_ensemble(c, seed, input_lo, input_hi);
  const Eigen::MatrixXd O = reservoir::run_sequence(data.inputs, ensemble, start);
  const auto tr = static_cast<Eigen::Index>(c.train);
  const auto te = static_cast<Eigen::Index>(c.test);
  const Eigen::MatrixXd y = data.targets.bottomRows(O.rows());
  const auto readout = learn::train_readout(O.topRows(tr), y.topRows(tr), c.ridge);

  SeedOutcome out;
  out.seed = seed;
  out.prediction = readout.predict(O.middleRows(tr, te));
  out.target = y.middleRows(tr, te);
  const Eigen::MatrixXd fit = readout.predict(O.topRows(tr));
  if (binary) {
    out.metrics.emplace_back("accuracy", learn::accuracy(out.prediction.col(0), out.target.col(0)));
    out.metrics.emplace_back("train_accuracy", learn::accuracy(fit.col(0), y.topRows(tr).col(0)));
  } else {
    out.metrics.emplace_back("capacity", learn::capacity(out.prediction.col(0), out.target.col(0)));
    out.metrics.emplace_back("train_capacity", learn::capacity(fit.col(0), y.topRows(tr).col(0)));
  }
  return out;
}

SeedOutcome double_scroll(const ExperimentConfig& c, std::uint64_t seed) {
  if (c.horizon == 0) throw ConfigError("forecast horizon must be positive", "horizon");
  const auto w = static_cast<Eigen::Index>(c.washout);
  const auto tr = static_cast<Eigen::Index>(c.train);
  const auto h = static_cast<Eigen::Index>(c.horizon);
  const Eigen::MatrixXd raw = learn::double_scroll_series(static_cast<std::size_t>(w + tr + h + 1), seed);
  const auto scaler = learn::ChannelScaler::fit(raw.topRows(w + tr));
  const Eigen::MatrixXd u = scaler.apply(raw);

  auto ensemble = build_ensemble(c, seed, -1.0, 1.0);
  auto state = ensemble.initial_state();
  Eigen::MatrixXd O(tr, static_cast<Eigen::Index>(ensemble.width()));
  std::vector<double> row(3);
  for (Eigen::Index k = 0; k < w + tr; ++k) {
    for (Eigen::Index ch = 0; ch < 3; ++ch) row[static_cast<std::size_t>(ch)] = u(k, ch);
    const Eigen::VectorXd o = ensemble.step(row, state);
    if (k >= w) O.row(k - w) = o.transpose();
  }
  const auto readout = learn::train_readout(O, u.middleRows(w + 1, tr), c.ridge);

  SeedOutcome out;
  out.seed = seed;
  out.prediction = learn::closed_loop_forecast(ensemble, state, readout, c.horizon);
  out.target = u.middleRows(w + tr, h);
  const Eigen::VectorXd cap = learn::channel_capacity(out.prediction, out.target);
  const Eigen::VectorXd one_step =
      learn::channel_capacity(readout.predict(O), u.middleRows(w + 1, tr));
  const char* names[3] = {"v1", "v2", "i"};
  for (int ch = 0; ch < 3; ++ch) {
    out.metrics.emplace_back(std::string("capacity_") + names[ch], cap(ch));
  }
  for (int ch = 0; ch < 3; ++ch) {
    out.metrics.emplace_back(std::string("train_capacity_") + names[ch], one_step(ch));
  }
  return out;
}

SeedOutcome kernel_quality_run(const ExperimentConfig& c, std::uint64_t seed) {
  auto ensemble = build_ensemble(c, seed, -1.0, 1.0);
  const std::size_t d = ensemble.width();
  auto rng = make_rng(seed, "task/kernel_quality");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd inputs(static_cast<Eigen::Index>(c.washout + d), 1);
  for (Eigen::Index k = 0; k < inputs.rows(); ++k) inputs(k, 0) = u(rng);
  const Eigen::MatrixXd O = reservoir::run_sequence(inputs, ensemble, c.washout);
  SeedOutcome out;
  out.seed = seed;
  out.metrics.emplace_back("kernel_quality", static_cast<double>(reservoir::kernel_quality(O, 1e-4)));
  out.metrics.emplace_back("observables", static_cast<double>(d));
  out.prediction = O;
  return out;
}

std::vector<std::uint64_t> parse_seeds(const Json& j) {
  if (j.contains("seeds")) {
    const auto& s = j.at("seeds");
    if (s.is_number_integer()) {
      const auto count = s.get<std::int64_t>();
      if (count <= 0) throw ConfigError("seed count must be positive", "seeds");
      std::vector<std::uint64_t> out(static_cast<std::size_t>(count));
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
      return out;
    }
    auto out = required<std::vector<std::uint64_t>>(j, "seeds");
    if (out.empty()) throw ConfigError("seed list is empty", "seeds");
    return out;
  }
  if (j.contains("seed")) return {required<std::uint64_t>(j, "seed")};
  return {0};
}

}  // namespace

Task task_from_string(const std::string& name) {
  if (name == "xor") return Task::xor_task;
  if (name == "parity") return Task::parity;
  if (name == "memory") return Task::memory;
  if (name == "double_scroll") return Task::double_scroll;
  if (name == "kernel_quality") return Task::kernel_quality;
  throw ConfigError("unknown task '" + name + "'", "task");
}

const char* to_string(Task task) {
  switch (task) {
    case Task::xor_task: return "xor";
    case Task::parity: return "parity";
    case Task::memory: return "memory";
    case Task::double_scroll: return "double_scroll";
    case Task::kernel_quality: return "kernel_quality";
  }
  return "?";
}

ExperimentConfig parse_experiment(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  static const std::set<std::string> known = {
      "task", "preset", "backend", "noise", "reservoirs", "segments", "modes", "observables",
      "tau", "train", "test", "washout", "horizon", "seeds", "seed", "ridge", "twin", "sweep",
      "description"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "'", key);
  }

  ExperimentConfig c;
  c.base_dir = base_dir;
  c.source = j;
  c.task = task_from_string(required<std::string>(j, "task"));
  const auto def = defaults_for(c.task);
  c.preset = optional_or<std::string>(j, "preset", def.preset);
  c.encoding = load_encoding_preset(c.preset, base_dir);
  c.backend = optional_or<std::string>(j, "backend", def.backend);
  if (c.backend != "analytic" && c.backend != "pipeline") {
    throw ConfigError("backend must be 'analytic' or 'pipeline'", "backend");
  }
  const Json noise = j.contains("noise") ? j.at("noise") : Json(def.noise);
  c.noise_label = noise.is_string() ? noise.get<std::string>() : noise.dump();
  c.noise = load_noise_preset(noise, base_dir);
  c.reservoirs = optional_or<std::size_t>(j, "reservoirs", 0);
  if (j.contains("segments") && j.at("segments").is_string()) {
    if (j.at("segments").get<std::string>() != "n") {
      throw ConfigError("segments must be an integer or \"n\"", "segments");
    }
    c.segments_follow_modes = true;
  } else {
    c.segments = optional_or<std::size_t>(j, "segments", def.segments);
  }
  c.modes = optional_or<std::size_t>(j, "modes", def.modes);
  c.observables = optional_or<std::string>(j, "observables", "auto");
  c.tau = optional_or<std::size_t>(j, "tau", 1);
  c.washout = optional_or<std::size_t>(j, "washout", def.washout);
  c.train = optional_or<std::size_t>(j, "train", def.train);
  c.test = optional_or<std::size_t>(j, "test", def.test);
  c.horizon = optional_or<std::size_t>(j, "horizon", 9);
  c.seeds = parse_seeds(j);
  c.ridge = optional_or<double>(j, "ridge", 0.0);
  if (j.contains("twin")) c.twin = load_twin_config(j.at("twin"), base_dir);

  if (c.segments == 0 || c.modes == 0) throw ConfigError("N and n must be positive", "modes");
  if (c.ridge < 0.0) throw ConfigError("ridge must be non-negative", "ridge");
  const bool supervised_task = c.task == Task::xor_task || c.task == Task::parity || c.task == Task::memory;
  if (supervised_task && (c.train == 0 || c.test == 0)) {
    throw ConfigError("train and test sizes must be positive", c.train == 0 ? "train" : "test");
  }
  if (c.task == Task::double_scroll && c.train < 2) throw ConfigError("train must be at least 2", "train");
  if (c.task == Task::parity && c.tau == 0) throw ConfigError("parity order must be at least 1", "tau");
  if ((c.task == Task::parity || c.task == Task::kernel_quality) &&
      !std::holds_alternative<GeneralEncoding>(c.encoding)) {
    throw ConfigError("task '" + std::string(to_string(c.task)) + "' needs a general-encoding preset",
                      "preset");
  }
  if (c.task == Task::double_scroll && std::holds_alternative<GeneralEncoding>(c.encoding)) {
    throw ConfigError("double-scroll forecasting needs a global-phase preset", "preset");
  }
  refresh_hash(c);
  return c;
}

ExperimentConfig load_experiment(const fs::path& path) {
  return parse_experiment(load_json(path), path.parent_path());
}

bool is_sweep_axis(const std::string& axis) {
  static const std::set<std::string> axes = {"train_size", "tau", "R", "n", "N", "noise"};
  return axes.count(axis) > 0;
}

ExperimentConfig with_axis_value(const ExperimentConfig& config, const std::string& axis,
                                 const Json& value) {
  static const std::map<std::string, std::string> keys = {
      {"train_size", "train"}, {"tau", "tau"}, {"R", "reservoirs"},
      {"n", "modes"},          {"N", "segments"}, {"noise", "noise"}};
  const auto it = keys.find(axis);
  if (it == keys.end()) throw ConfigError("unknown sweep axis '" + axis + "'", "sweep.axis");
  const bool count = value.is_number_integer() && value.get<std::int64_t>() >= 0;
  if (axis != "noise" && !(count || (axis == "N" && value == "n"))) {
    throw ConfigError("sweep value for '" + axis + "' must be a non-negative integer", "sweep.values");
  }
  Json j = config.source;
  j.erase("sweep");
  j[it->second] = value;
  return parse_experiment(j, config.base_dir);
}

double SeedOutcome::metric(const std::string& name) const {
  for (const auto& [k, v] : metrics) {
    if (k == name) return v;
  }
  throw ConfigError("no metric '" + name + "'", name);
}

reservoir::Ensemble build_ensemble(const ExperimentConfig& config, std::uint64_t seed,
                                   double input_lo, double input_hi) {
  return std::visit(
      overloaded{
          [&](const FixedGlobalPhase& p) {
            if (config.reservoirs != 0 && config.reservoirs != static_cast<std::size_t>(p.alpha.size())) {
              throw ConfigError("preset '" + config.preset + "' defines " +
                                std::to_string(p.alpha.size()) + " reservoirs, config asks for " +
                                std::to_string(config.reservoirs), "reservoirs");
            }
            return global_phase_ensemble(config, p.alpha, p.beta, p.mask, p.v_pi2, seed);
          },
          [&](const RandomGlobalPhase& p) {
            const std::size_t r = config.reservoirs != 0 ? config.reservoirs : p.reservoirs;
            const auto n = static_cast<Eigen::Index>(r);
            auto rng = make_rng(seed, "encoding/random_global_phase");
            std::uniform_real_distribution<double> in(-p.input_range, p.input_range);
            std::uniform_real_distribution<double> sym(-1.0, 1.0);
            Eigen::VectorXd alpha(n);
            for (Eigen::Index i = 0; i < n; ++i) alpha(i) = in(rng) * p.v_pi2;
            Eigen::MatrixXd mask(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
              for (Eigen::Index k = 0; k < n; ++k) mask(i, k) = sym(rng);
            }
            const double top = Eigen::BDCSVD<Eigen::MatrixXd>(mask).singularValues()(0);
            mask *= p.mask_scale * p.v_pi2 / top;
            return global_phase_ensemble(config, alpha, Eigen::VectorXd::Zero(n), mask, p.v_pi2, seed);
          },
          [&](const GeneralEncoding& g) { return general_ensemble(config, g, seed, input_lo, input_hi); },
      },
      config.encoding);
}

SeedOutcome run_seed(const ExperimentConfig& config, std::uint64_t seed) {
  try {
    switch (config.task) {
      case Task::xor_task: {
        auto data = learn::gen_xor(std::max<std::size_t>(config.washout, 1) + config.train + config.test, seed);
        return supervised(config, data, seed, 0.0, 1.0, true);
      }
      case Task::parity: {
        auto data = learn::gen_parity(std::max(config.washout, config.tau) + config.train + config.test,
                                      config.tau, seed);
        return supervised(config, data, seed, 0.0, 1.0, true);
      }
      case Task::memory: {
        auto data = learn::gen_memory(std::max(config.washout, config.tau) + config.train + config.test,
                                      config.tau, seed);
        return supervised(config, data, seed, -1.0, 1.0, false);
      }
      case Task::double_scroll:
        return double_scroll(config, seed);
      case Task::kernel_quality:
        return kernel_quality_run(config, seed);
    }
  } catch (const DivergenceError& e) {
    throw DivergenceError("seed " + std::to_string(seed) + ": " + e.what());
  }
  throw ConfigError("unhandled task");
}

}  // namespace cvqrc::harness
