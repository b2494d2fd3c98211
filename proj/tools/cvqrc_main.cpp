#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvqrc/error.hpp"
#include "cvqrc/harness/commands.hpp"
#include "cvqrc/harness/config.hpp"
#include "cvqrc/harness/experiments.hpp"

namespace fs = std::filesystem;
using namespace cvqrc;
using namespace cvqrc::harness;

namespace {

struct Options {
  std::string config;
  std::string out = "out";
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint64_t> seed;
  std::string backend;
  std::vector<std::string> traces;
  bool quiet = false;
};

Overrides overrides_of(const Options& o) {
  Overrides ov;
  if (!o.seeds.empty()) ov.seeds = o.seeds;
  if (o.seed) ov.seeds = std::vector<std::uint64_t>{*o.seed};
  if (!o.backend.empty()) ov.backend = o.backend;
  return ov;
}

void add_common(CLI::App* cmd, Options& o, bool experiment) {
  cmd->add_option("--config", o.config, "JSON configuration file")->required();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_flag("--quiet", o.quiet, "suppress the summary");
  if (experiment) {
    auto* many = cmd->add_option("--seeds", o.seeds, "comma-separated seed list")->delimiter(',');
    cmd->add_option("--seed", o.seed, "single seed")->excludes(many);
    cmd->add_option("--backend", o.backend, "analytic or pipeline")
        ->check(CLI::IsMember({"analytic", "pipeline"}));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Numerical twin of a continuous-variable optical reservoir computer", "cvqrc"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);
  Options o;

  auto* jsa = app.add_subcommand("jsa", "joint spectral amplitude and Schmidt modes");
  add_common(jsa, o, false);
  auto* task = app.add_subcommand("run-task", "train and evaluate one task over seeds");
  add_common(task, o, true);
  auto* sweep = app.add_subcommand("sweep", "run a task over a grid of one parameter");
  add_common(sweep, o, true);
  auto* fit = app.add_subcommand("fit-noise", "fit per-observable noise from repeated traces");
  fit->add_option("traces", o.traces, "trace CSV files")->required();
  fit->add_option("--out", o.out, "noise preset file to write")->required();
  fit->add_flag("--quiet", o.quiet, "suppress the per-observable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  std::ostream* log = o.quiet ? nullptr : &std::cout;
  if (jsa->parsed()) {
    const fs::path path(o.config);
    cmd_jsa(load_json(path), path.parent_path(), o.out, log);
  } else if (task->parsed()) {
    const auto config = apply_overrides(load_experiment(o.config), overrides_of(o));
    cmd_run_task(config, o.out, log);
  } else if (sweep->parsed()) {
    const fs::path path(o.config);
    const Json doc = load_json(path);
    const auto spec = parse_sweep(doc);
    const auto config = apply_overrides(parse_experiment(doc, path.parent_path()), overrides_of(o));
    cmd_sweep(config, spec, o.out, log);
  } else if (fit->parsed()) {
    std::vector<fs::path> traces(o.traces.begin(), o.traces.end());
    cmd_fit_noise(traces, o.out, log);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error";
    if (!e.key().empty()) std::cerr << " [" << e.key() << "]";
    std::cerr << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const DimensionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
