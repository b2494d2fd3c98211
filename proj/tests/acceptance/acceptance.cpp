// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria (0 when all pass).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvqrc/harness/experiments.hpp"
#include "cvqrc/harness/presets.hpp"
#include "cvqrc/learn/double_scroll.hpp"
#include "cvqrc/optics/covariance.hpp"
#include "cvqrc/optics/pipeline.hpp"
#include "cvqrc/reservoir/backend.hpp"
#include "cvqrc/reservoir/ensemble.hpp"
#include "cvqrc/reservoir/noise.hpp"

using namespace cvqrc;
using harness::Json;

namespace {

constexpr double kPi = std::numbers::pi;

// Criterion 1
constexpr double kOracleTol = 1e-8;
// Criterion 2
constexpr double kSymplecticTol = 1e-10;
constexpr double kPurityTol = 1e-6;
// Criterion 3
constexpr double kXorAverageMin = 0.95;
constexpr double kXorLowMin = 0.97;
// Criterion 4
constexpr double kMemoryLo = 0.70;
constexpr double kMemoryHi = 0.92;
constexpr double kMemoryInversionMax = 0.03;
// Criterion 5
constexpr double kParityMin = 0.99;
// Criterion 6
constexpr double kScrollMin[3] = {0.85, 0.75, 0.80};
// Criterion 7
constexpr std::size_t kGlobalPhaseRankMax = 3;
// Criterion 8
constexpr double kOriginTol = 1e-12;
constexpr double kFineStepTol = 1e-6;
constexpr double kBoundedBox = 3.0;
// Criterion 9
constexpr double kNoiseInjected = 0.05;
constexpr double kNoiseTol = 0.01;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

harness::ExperimentConfig experiment(Json j) { return harness::parse_experiment(j, "."); }

std::vector<std::uint64_t> seeds(std::size_t n) {
  std::vector<std::uint64_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

double seed_mean(const harness::ExperimentConfig& c, const std::string& metric) {
  double sum = 0.0;
  for (const auto s : c.seeds) sum += harness::run_seed(c, s).metric(metric);
  return sum / static_cast<double>(c.seeds.size());
}

Verdict oracle_equivalence() {
  double worst = 0.0;
  for (std::size_t n : {1u, 2u, 4u}) {
    auto config = harness::load_twin_config(Json("twin_reservoir"), ".");
    config.modes = n;
    const optics::DigitalTwin twin(config);
    const auto& U = twin.reference_basis().overlap;
    for (int i = 0; i <= 8; ++i) {
      const std::vector<double> delta{kPi / 2 * i / 8};
      const auto pipe = twin.covariance(delta);
      const auto closed = optics::analytic_global_phase_covariance(delta[0], U, twin.reference().r);
      worst = std::max(worst, (pipe.entries() - closed.entries()).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= kOracleTol, "max |pipeline - closed form| = " + fmt(worst, 3)};
}

Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ();
}

Verdict symplectic_suite() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_form = 0.0;
  double lowest_nu = 1e300;
  int not_pd = 0;
  double worst_asym = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = size(rng);
    const auto S = optics::symplectic_from_unitary(haar_unitary(n, rng));
    const auto omega = optics::symplectic_form(static_cast<std::size_t>(n));
    worst_form = std::max(worst_form, (S.transpose() * omega * S - omega).cwiseAbs().maxCoeff());
  }
  for (int t = 0; t < 100; ++t) {
    const int n = size(rng);
    Eigen::VectorXd r(n), psi(n);
    for (int k = 0; k < n; ++k) {
      r(k) = 0.8 * u(rng);
      psi(k) = 2 * kPi * u(rng);
    }
    const auto sigma = optics::covariance_in_basis(r, psi, haar_unitary(n, rng));
    worst_asym = std::max(worst_asym, (sigma.entries() - sigma.entries().transpose()).cwiseAbs().maxCoeff());
    if (!sigma.is_positive_definite()) {
      ++not_pd;
      continue;
    }
    lowest_nu = std::min(lowest_nu, sigma.symplectic_eigenvalues().minCoeff());
  }
  const bool pass = worst_form <= kSymplecticTol && not_pd == 0 && lowest_nu >= 1.0 - kPurityTol &&
                    worst_asym <= 1e-10;
  return {pass, "max |S^T W S - W| = " + fmt(worst_form, 3) + ", non-PD " + std::to_string(not_pd) +
                    ", min nu = " + fmt(lowest_nu, 12)};
}

Verdict xor_task() {
  const auto avg = seed_mean(
      experiment({{"task", "xor"}, {"noise", "average"}, {"train", 70}, {"test", 49}, {"seeds", seeds(10)}}),
      "accuracy");
  const auto low = seed_mean(
      experiment({{"task", "xor"}, {"noise", "low"}, {"train", 70}, {"test", 49}, {"seeds", seeds(10)}}),
      "accuracy");
  return {avg >= kXorAverageMin && low >= kXorLowMin,
          "accuracy average-noise " + fmt(avg) + " (>= " + fmt(kXorAverageMin) + "), low-noise " + fmt(low) +
              " (>= " + fmt(kXorLowMin) + ")"};
}

Verdict linear_memory() {
  std::vector<double> r5, r1;
  for (int tau = 1; tau <= 5; ++tau) {
    r5.push_back(seed_mean(experiment({{"task", "memory"}, {"preset", "memory_r5"}, {"tau", tau}, {"seeds", seeds(10)}}),
                           "capacity"));
    r1.push_back(seed_mean(experiment({{"task", "memory"}, {"preset", "memory_r1"}, {"tau", tau}, {"seeds", seeds(10)}}),
                           "capacity"));
  }
  int inversions = 0;
  double largest = 0.0;
  for (std::size_t i = 1; i < r5.size(); ++i) {
    if (r5[i] > r5[i - 1]) {
      ++inversions;
      largest = std::max(largest, r5[i] - r5[i - 1]);
    }
  }
  bool dominates = true;
  for (std::size_t i = 0; i < r5.size(); ++i) dominates = dominates && r5[i] >= r1[i];
  const bool in_band = r5[0] >= kMemoryLo && r5[0] <= kMemoryHi;
  const bool decreasing = inversions == 0 || (inversions == 1 && largest <= kMemoryInversionMax);
  std::string curve5, curve1;
  for (std::size_t i = 0; i < r5.size(); ++i) {
    curve5 += (i ? " " : "") + fmt(r5[i], 3);
    curve1 += (i ? " " : "") + fmt(r1[i], 3);
  }
  return {in_band && decreasing && dominates,
          "R=5 tau=1..5: " + curve5 + " | R=1: " + curve1 + " | inversions " + std::to_string(inversions)};
}

Verdict parity_check() {
  std::vector<double> acc;
  std::string detail = "N=n=9:";
  bool pass = true;
  for (int tau = 1; tau <= 3; ++tau) {
    const auto a = seed_mean(experiment({{"task", "parity"}, {"tau", tau}, {"segments", 9}, {"modes", 9},
                                         {"noise", "none"}, {"seeds", seeds(5)}}),
                             "accuracy");
    acc.push_back(a);
    pass = pass && a >= kParityMin;
    detail += " tau" + std::to_string(tau) + "=" + fmt(a);
  }
  const auto single = seed_mean(experiment({{"task", "parity"}, {"tau", 3}, {"segments", 1}, {"modes", 9},
                                            {"noise", "none"}, {"seeds", seeds(5)}}),
                                "accuracy");
  pass = pass && single < acc[2];
  return {pass, detail + " | N=1 tau3=" + fmt(single)};
}

Verdict double_scroll() {
  const char* names[3] = {"v1", "v2", "i"};
  double cap[3][3] = {};
  const int sizes[3] = {100, 200, 350};
  for (int s = 0; s < 3; ++s) {
    const auto c = experiment({{"task", "double_scroll"}, {"train", sizes[s]}, {"noise", "average"},
                               {"reservoirs", 15}, {"seeds", seeds(5)}});
    for (const auto seed : c.seeds) {
      const auto o = harness::run_seed(c, seed);
      for (int ch = 0; ch < 3; ++ch) cap[s][ch] += o.metric(std::string("capacity_") + names[ch]) / 5.0;
    }
  }
  bool pass = true;
  std::string detail = "train 350:";
  for (int ch = 0; ch < 3; ++ch) {
    pass = pass && cap[2][ch] >= kScrollMin[ch];
    detail += std::string(" ") + names[ch] + "=" + fmt(cap[2][ch], 3) + "(>=" + fmt(kScrollMin[ch], 2) + ")";
  }
  detail += " | by train size:";
  for (int ch = 0; ch < 3; ++ch) {
    pass = pass && cap[0][ch] <= cap[1][ch] && cap[1][ch] <= cap[2][ch];
    detail += std::string(" ") + names[ch] + " " + fmt(cap[0][ch], 3) + "/" + fmt(cap[1][ch], 3) + "/" +
              fmt(cap[2][ch], 3);
  }
  return {pass, detail};
}

Verdict kernel_quality() {
  bool pass = true;
  std::string detail = "n: rank N=1 / N=n:";
  double previous = 0.0;
  for (int n : {1, 2, 4, 6, 8}) {
    double single = 0.0, full = 0.0;
    std::size_t single_max = 0;
    const auto cs = experiment({{"task", "kernel_quality"}, {"modes", n}, {"segments", 1}, {"seeds", seeds(3)}});
    const auto cf = experiment({{"task", "kernel_quality"}, {"modes", n}, {"segments", n}, {"seeds", seeds(3)}});
    for (const auto seed : cs.seeds) {
      const auto v = harness::run_seed(cs, seed).metric("kernel_quality");
      single += v / 3.0;
      single_max = std::max(single_max, static_cast<std::size_t>(v));
      full += harness::run_seed(cf, seed).metric("kernel_quality") / 3.0;
    }
    pass = pass && single_max <= kGlobalPhaseRankMax;
    if (n >= 4) pass = pass && full > single;
    pass = pass && full >= previous;
    previous = full;
    detail += " " + std::to_string(n) + ": " + fmt(single, 3) + "/" + fmt(full, 3);
  }
  return {pass, detail};
}

Verdict integrator() {
  const auto origin = learn::double_scroll_integrate(learn::DoubleScrollState::Zero(), 100);
  const double drift = origin.cwiseAbs().maxCoeff();
  const learn::DoubleScrollState x0(0.1, 0.0, 0.0);
  const double gap = (learn::double_scroll_integrate(x0, 1, 1.0, 0.01) -
                      learn::double_scroll_integrate(x0, 1, 1.0, 0.001))
                         .cwiseAbs()
                         .maxCoeff();
  const auto traj = learn::double_scroll_integrate(learn::DoubleScrollState(0.1, 0.2, 0.3), 10000);
  const double extent = traj.cwiseAbs().maxCoeff();
  return {drift <= kOriginTol && gap <= kFineStepTol && extent < kBoundedBox,
          "origin drift " + fmt(drift, 3) + ", dt/10 gap " + fmt(gap, 3) + ", max |x| over 1e4 samples " +
              fmt(extent, 4)};
}

Verdict noise_fit() {
  // Ten fixed phases, 200 noisy repetitions each, through the reservoir's own noise path.
  const auto backend = reservoir::AnalyticBackend::single_mode();
  const auto sel = reservoir::ObservableSelection::single_mode(1);
  const auto norm = reservoir::Normalizer::global_phase(backend->overlap(), backend->squeezing(), sel);
  std::vector<Eigen::MatrixXd> reps;
  for (int p = 0; p < 10; ++p) {
    reservoir::EncodingParams e;
    e.alpha = Eigen::VectorXd::Zero(1);
    e.beta = Eigen::VectorXd::Constant(1, kPi / 2 * p / 10);
    e.mask = Eigen::MatrixXd::Zero(1, 1);
    reservoir::Ensemble ens({{e, backend, norm}}, sel, reservoir::NoiseModel::uniform(1, kNoiseInjected),
                            reservoir::Ensemble::cross_feedback(1, 0), 100 + p);
    auto state = ens.initial_state();
    Eigen::MatrixXd block(200, 3);
    const std::vector<double> s{0.0};
    for (int k = 0; k < 200; ++k) block.row(k) = ens.step(s, state).transpose();
    reps.push_back(block);
  }
  const auto fit = reservoir::fit_noise(reps);
  const double worst = (fit.stddev.array() - kNoiseInjected).abs().maxCoeff();
  return {worst <= kNoiseTol, "fitted std " + fmt(fit.stddev(0)) + ", " + fmt(fit.stddev(1)) + ", " +
                                  fmt(fit.stddev(2)) + " (injected " + fmt(kNoiseInjected) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"symplectic suite", symplectic_suite},
      {"xor", xor_task},
      {"linear memory", linear_memory},
      {"parity check", parity_check},
      {"double-scroll forecast", double_scroll},
      {"kernel quality", kernel_quality},
      {"double-scroll integrator", integrator},
      {"noise-fit recovery", noise_fit},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += v.pass ? 0 : 1;
    std::printf("%s criterion %zu (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
