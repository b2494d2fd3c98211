#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cvqrc/harness/config.hpp"
#include "cvqrc/harness/csv.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;
using cvqrc::harness::Json;
using cvqrc::testing::scratch_dir;

namespace {

struct Result {
  int code = -1;
  std::string output;
};

Result run(const std::string& args, const fs::path& dir) {
  const auto log = dir / "cli.log";
  const std::string cmd = std::string(CVQRC_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

fs::path write_config(const fs::path& dir, const std::string& name, const Json& j) {
  const auto p = dir / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

const fs::path kConfigs = CVQRC_CONFIG_DIR;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help and usage errors") {
    const auto dir = scratch_dir("cli_usage");
    CHECK(run("--help", dir).code == 0);
    CHECK(run("", dir).code == 2);
    CHECK(run("run-task", dir).code == 2);
    CHECK(run("run-task --config x.json --backend quantum", dir).code == 2);
  }

  TEST_CASE("jsa on the toy crystal") {
    const auto dir = scratch_dir("cli_jsa");
    const auto r = run("jsa --config " + (kConfigs / "jsa_toy.json").string() + " --out " + (dir / "out").string(), dir);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "out" / "jsa_magnitude.csv"));
    CHECK(fs::exists(dir / "out" / "schmidt_spectrum.csv"));
    CHECK(fs::exists(dir / "out" / "mode_profiles.csv"));
  }

  TEST_CASE("jsa with a missing crystal file") {
    const auto dir = scratch_dir("cli_jsa_missing");
    const auto cfg = write_config(dir, "bad.json", {{"crystal", (dir / "absent_crystal.json").string()}});
    const auto r = run("jsa --config " + cfg.string() + " --out " + (dir / "out").string(), dir);
    CHECK(r.code == 2);
    CHECK(r.output.find("absent_crystal.json") != std::string::npos);
  }

  TEST_CASE("run-task writes metrics and predictions") {
    const auto dir = scratch_dir("cli_run");
    const auto r = run("run-task --config " + (kConfigs / "xor.json").string() + " --seeds 1,2 --out " +
                           (dir / "out").string(),
                       dir);
    CHECK(r.code == 0);
    CHECK(r.output.find("accuracy") != std::string::npos);
    const auto metrics = cvqrc::harness::load_json(dir / "out" / "metrics.json");
    REQUIRE(metrics.is_array());
    CHECK(metrics.at(0).at("task") == "xor");
    CHECK(metrics.at(0).at("seed") == 1);
    CHECK(fs::exists(dir / "out" / "predictions_seed2.csv"));
    CHECK(fs::exists(dir / "out" / "run.json"));
    const auto quiet = run("run-task --config " + (kConfigs / "xor.json").string() + " --seed 3 --quiet --out " +
                               (dir / "q").string(),
                           dir);
    CHECK(quiet.code == 0);
    CHECK(quiet.output.empty());
  }

  TEST_CASE("invalid preset is a config error") {
    const auto dir = scratch_dir("cli_preset");
    const auto cfg = write_config(dir, "bad.json", {{"task", "xor"}, {"preset", "no_such_preset"}});
    const auto r = run("run-task --config " + cfg.string() + " --out " + (dir / "out").string(), dir);
    CHECK(r.code == 2);
    CHECK(r.output.find("preset") != std::string::npos);
  }

  TEST_CASE("divergence exits with 3 and names the seed") {
    const auto dir = scratch_dir("cli_diverge");
    const auto cfg = write_config(dir, "diverge.json", {{"task", "xor"}, {"noise", 1e308}, {"seeds", {5}}});
    const auto r = run("run-task --config " + cfg.string() + " --out " + (dir / "out").string(), dir);
    CHECK(r.code == 3);
    CHECK(r.output.find("seed 5") != std::string::npos);
  }

  TEST_CASE("sweep emits long-format CSV") {
    const auto dir = scratch_dir("cli_sweep");
    const auto cfg = write_config(dir, "sweep.json",
                                  {{"task", "memory"}, {"seeds", {0, 1}}, {"train", 60}, {"test", 30},
                                   {"sweep", {{"axis", "tau"}, {"values", {1, 2}}}}});
    const auto r = run("sweep --config " + cfg.string() + " --quiet --out " + (dir / "out").string(), dir);
    CHECK(r.code == 0);
    const auto t = cvqrc::harness::read_csv(dir / "out" / "sweep.csv");
    CHECK(t.header == std::vector<std::string>{"preset", "axis", "axis_value", "seed", "metric", "value"});
    CHECK(t.rows.size() == 8);
  }

  TEST_CASE("sweep with an empty axis list") {
    const auto dir = scratch_dir("cli_sweep_empty");
    const auto cfg = write_config(dir, "sweep.json",
                                  {{"task", "memory"}, {"sweep", {{"axis", "tau"}, {"values", Json::array()}}}});
    CHECK(run("sweep --config " + cfg.string() + " --out " + (dir / "out").string(), dir).code == 2);
  }

  TEST_CASE("fit-noise success and a header-less trace") {
    const auto dir = scratch_dir("cli_fit");
    {
      std::ofstream t(dir / "trace.csv");
      t << "point,observable,value\n";
      for (int p = 0; p < 4; ++p) {
        for (int k = 0; k < 3; ++k) t << p << ",q1q1," << 0.1 * p << '\n';
      }
    }
    auto r = run("fit-noise " + (dir / "trace.csv").string() + " --out " + (dir / "noise.json").string(), dir);
    CHECK(r.code == 0);
    CHECK(cvqrc::harness::load_json(dir / "noise.json").at("stddev").at(0).get<double>() < 1e-8);
    std::ofstream(dir / "raw.csv") << "0,q1q1,0.5\n0,q1q1,0.6\n";
    r = run("fit-noise " + (dir / "raw.csv").string() + " --out " + (dir / "n2.json").string(), dir);
    CHECK(r.code == 2);
    CHECK(r.output.find("line 1") != std::string::npos);
  }
}
