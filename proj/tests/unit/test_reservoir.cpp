#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cvqrc/error.hpp"
#include "cvqrc/harness/experiments.hpp"
#include "cvqrc/reservoir/backend.hpp"
#include "cvqrc/reservoir/encoding.hpp"
#include "cvqrc/reservoir/ensemble.hpp"
#include "cvqrc/reservoir/kernel_quality.hpp"
#include "cvqrc/reservoir/noise.hpp"
#include "cvqrc/reservoir/observables.hpp"

using namespace cvqrc;
using namespace cvqrc::reservoir;

namespace {

constexpr double kPi = std::numbers::pi;

EncodingParams scalar_encoding(double alpha, double beta, double mask, std::optional<double> v_pi2) {
  EncodingParams e;
  e.alpha = Eigen::VectorXd::Constant(1, alpha);
  e.beta = Eigen::VectorXd::Constant(1, beta);
  e.mask = Eigen::MatrixXd::Constant(1, 1, mask);
  e.v_pi2 = v_pi2;
  return e;
}

// One single-mode analytic reservoir feeding back its normalised q variance.
Ensemble single(const EncodingParams& e, double noise, std::uint64_t seed = 1) {
  const auto backend = AnalyticBackend::single_mode(0.3);
  const auto sel = ObservableSelection::single_mode(1);
  const auto norm = Normalizer::global_phase(backend->overlap(), backend->squeezing(), sel);
  return Ensemble({{e, backend, norm}}, sel, NoiseModel::uniform(1, noise),
                  Ensemble::cross_feedback(1, 0), seed);
}

harness::ExperimentConfig experiment(harness::Json j) { return harness::parse_experiment(j, "."); }

Eigen::MatrixXd column_inputs(const std::vector<double>& v) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = v[i];
  return m;
}

std::vector<double> uniform_inputs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_SUITE("reservoir.encoding") {
  TEST_CASE("voltage to phase") {
    CHECK(phase_from_voltage(0.0, 0.075) == 0.0);
    CHECK(phase_from_voltage(0.075, 0.075) == doctest::Approx(kPi / 2));
    CHECK(phase_from_voltage(0.0375, 0.075) == doctest::Approx(kPi / 4));
    CHECK(phase_from_voltage(0.0375, 0.075, 0.1) == doctest::Approx(kPi / 4 + 0.1));
  }

  TEST_CASE("constant encoding without input or feedback") {
    EncodingParams e;
    e.alpha = Eigen::VectorXd::Zero(3);
    e.beta = Eigen::Vector3d(0.1, -0.2, 0.3);
    e.mask = Eigen::MatrixXd::Zero(3, 2);
    const std::vector<double> s{0.7};
    for (double f : {0.0, 0.4, 1.0}) {
      const auto d = encode_phases(s, Eigen::VectorXd::Constant(2, f), e);
      CHECK((d - e.beta).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  TEST_CASE("XOR parameters map through the voltage scale") {
    const auto e = scalar_encoding(0.075, -0.01, 0.035, 0.075);
    const std::vector<double> s{1.0};
    const auto d = encode_phases(s, Eigen::VectorXd::Constant(1, 0.5), e);
    CHECK(d(0) == doctest::Approx(phase_from_voltage(0.075 * 1 - 0.01 + 0.035 * 0.5, 0.075)));
  }

  TEST_CASE("vector inputs cycle over segments") {
    EncodingParams e;
    e.alpha = Eigen::VectorXd::Ones(5);
    e.beta = Eigen::VectorXd::Zero(5);
    e.mask = Eigen::MatrixXd::Zero(5, 1);
    const std::vector<double> s{10.0, 20.0, 30.0};
    const auto d = encode_phases(s, Eigen::VectorXd::Zero(1), e);
    CHECK(d(0) == 10.0);
    CHECK(d(3) == 10.0);
    CHECK(d(4) == 20.0);
    const auto shifted = encode_phases(s, Eigen::VectorXd::Zero(1), e, 2);
    CHECK(shifted(0) == 30.0);
    CHECK(shifted(1) == 10.0);
  }

  TEST_CASE("an ensemble needs a segment per input component") {
    auto ens = single(scalar_encoding(1.0, 0.0, 0.0, std::nullopt), 0.0);
    auto state = ens.initial_state();
    const std::vector<double> two{0.1, 0.2};
    CHECK_THROWS_AS(ens.step(two, state), DimensionError);
  }

  TEST_CASE("size mismatches") {
    const auto e = scalar_encoding(1.0, 0.0, 1.0, std::nullopt);
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(encode_phases(one, Eigen::VectorXd::Zero(3), e), DimensionError);
    auto bad = e;
    bad.v_pi2 = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
  }

  TEST_CASE("reachable box contains sampled phases") {
    EncodingParams e;
    e.alpha = Eigen::Vector2d(0.3, -0.5);
    e.beta = Eigen::Vector2d(0.1, 0.0);
    e.mask = Eigen::MatrixXd::Constant(2, 3, 0.2);
    const auto [lo, hi] = reachable_phase_box(e, -1.0, 1.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
      const std::vector<double> s{2 * u(rng) - 1};
      const auto d = encode_phases(s, Eigen::Vector3d(u(rng), u(rng), u(rng)), e);
      CHECK((d.array() >= lo.array()).all());
      CHECK((d.array() <= hi.array()).all());
    }
  }
}

TEST_SUITE("reservoir.observables") {
  TEST_CASE("raw single-mode observables in the supermode basis") {
    const auto backend = AnalyticBackend::single_mode(0.3);
    const std::vector<double> zero{0.0};
    const auto o = ObservableSelection::single_mode(1).extract(backend->covariance(zero));
    CHECK(o(0) == doctest::Approx(std::exp(0.6)));
    CHECK(o(1) == doctest::Approx(std::exp(-0.6)));
    CHECK(o(2) == doctest::Approx(0.0));
  }

  TEST_CASE("min-max extremes map to the bounds") {
    const auto backend = AnalyticBackend::single_mode(0.3);
    const auto sel = ObservableSelection::single_mode(1);
    const auto norm = Normalizer::global_phase(backend->overlap(), backend->squeezing(), sel);
    const std::vector<double> zero{0.0}, quarter{kPi / 2};
    CHECK(observables_from_covariance(backend->covariance(zero), sel, norm)(0) == doctest::Approx(1.0));
    CHECK(observables_from_covariance(backend->covariance(quarter), sel, norm)(0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 0; i <= 100; ++i) {
      const std::vector<double> d{-kPi + 2 * kPi * i / 100};
      const auto o = observables_from_covariance(backend->covariance(d), sel, norm);
      CHECK(o.minCoeff() >= -1e-12);
      CHECK(o.maxCoeff() <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("all unique elements of four modes") {
    const auto sel = ObservableSelection::all_unique(4);
    CHECK(sel.size() == 36);
    CHECK(sel.name(0) == "q1q1");
    CHECK(sel.name(sel.index_of({0, 4})) == "q1p1");
    CHECK_THROWS_AS(sel.index_of({4, 0}), ConfigError);
    CHECK_THROWS_AS(ObservableSelection(1, {{0, 2}}), ConfigError);
  }

  TEST_CASE("zero range names the observable") {
    const auto sel = ObservableSelection::single_mode(1);
    try {
      Normalizer::from_range(Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 0, 2), sel);
      FAIL("expected an exception");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("p1p1") != std::string::npos);
    }
  }
}

TEST_SUITE("reservoir.dynamics") {
  TEST_CASE("two-step hand recursion") {
    // Normalised single-mode observables are cos^2 d, sin^2 d and (sin 2d + 1) / 2.
    const double v = 0.075, alpha = 0.075, beta = -0.01, m = 0.035;
    auto ens = single(scalar_encoding(alpha, beta, m, v), 0.0);
    auto state = ens.initial_state();
    const std::vector<double> s1{1.0}, s2{0.0};
    const auto o1 = ens.step(s1, state);
    const double d1 = kPi / 2 * (alpha * 1 + beta) / v;
    CHECK(o1(0) == doctest::Approx(std::pow(std::cos(d1), 2)));
    CHECK(o1(1) == doctest::Approx(std::pow(std::sin(d1), 2)));
    CHECK(o1(2) == doctest::Approx((std::sin(2 * d1) + 1) / 2));
    const auto o2 = ens.step(s2, state);
    const double d2 = kPi / 2 * (beta + m * std::pow(std::cos(d1), 2)) / v;
    CHECK(o2(0) == doctest::Approx(std::pow(std::cos(d2), 2)));
    CHECK(o2(2) == doctest::Approx((std::sin(2 * d2) + 1) / 2));
    CHECK(state.step == 2);
  }

  TEST_CASE("no input and no feedback is a fixed point") {
    auto ens = single(scalar_encoding(0.0, 0.4, 0.0, std::nullopt), 0.0);
    auto state = ens.initial_state();
    const std::vector<double> s{0.3};
    const auto first = ens.step(s, state);
    for (int k = 0; k < 20; ++k) CHECK((ens.step(s, state) - first).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("noise scatter matches the configured deviation") {
    auto ens = single(scalar_encoding(0.0, 0.4, 0.0, std::nullopt), 0.05, 11);
    auto state = ens.initial_state();
    const std::vector<double> s{0.0};
    Eigen::MatrixXd samples(1000, 3);
    for (int k = 0; k < 1000; ++k) samples.row(k) = ens.step(s, state).transpose();
    for (int c = 0; c < 3; ++c) {
      const auto col = samples.col(c);
      const double mean = col.mean();
      const double sd = std::sqrt((col.array() - mean).square().sum() / 999.0);
      CHECK(sd == doctest::Approx(0.05).epsilon(0.2));
    }
  }

  TEST_CASE("single reservoir run equals repeated steps") {
    const auto inputs = uniform_inputs(40, 5);
    auto a = single(scalar_encoding(0.06, -0.01, 0.03, 0.075), 0.02, 9);
    auto b = single(scalar_encoding(0.06, -0.01, 0.03, 0.075), 0.02, 9);
    const auto O = run_sequence(column_inputs(inputs), a, 10);
    auto state = b.initial_state();
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const std::vector<double> s{inputs[k]};
      const auto o = b.step(s, state);
      if (k >= 10) CHECK((O.row(static_cast<Eigen::Index>(k - 10)).transpose() - o).norm() == 0.0);
    }
    CHECK_THROWS_AS(run_sequence(column_inputs(inputs), a, 40), DimensionError);
  }

  TEST_CASE("zero mask decouples the ensemble") {
    const auto cfg = experiment({{"task", "memory"}, {"preset", "memory_r5"}, {"noise", "none"}});
    const auto params = std::get<harness::FixedGlobalPhase>(cfg.encoding);
    const auto backend = AnalyticBackend::single_mode();
    const auto sel = ObservableSelection::single_mode(1);
    const auto norm = Normalizer::global_phase(backend->overlap(), backend->squeezing(), sel);
    std::vector<ReservoirUnit> units;
    for (int r = 0; r < 5; ++r) {
      units.push_back({scalar_encoding(params.alpha(r), params.beta(r), 0.0, params.v_pi2), backend, norm});
      units.back().encoding.mask = Eigen::MatrixXd::Zero(1, 5);
    }
    Ensemble joint(units, sel, NoiseModel::none(1), Ensemble::cross_feedback(5, 0), 0);
    const auto inputs = column_inputs(uniform_inputs(30, 2));
    const auto O = run_sequence(inputs, joint, 0);
    for (int r = 0; r < 5; ++r) {
      // Five feedback slots keep the zero mask shape; all read this reservoir.
      Ensemble alone({{units[r].encoding, backend, norm}}, sel, NoiseModel::none(1),
                     std::vector<FeedbackSource>(5, FeedbackSource{0, 0}), 0);
      const auto Or = run_sequence(inputs, alone, 0);
      CHECK((O.middleCols(3 * r, 3) - Or).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  TEST_CASE("feedback is causal") {
    const auto cfg = experiment({{"task", "memory"}, {"preset", "memory_r5"}, {"noise", "none"}});
    auto inputs = uniform_inputs(60, 4);
    auto e1 = harness::build_ensemble(cfg, 0, -1.0, 1.0);
    const auto a = run_sequence(column_inputs(inputs), e1, 0);
    for (std::size_t k = 30; k < inputs.size(); ++k) inputs[k] = -inputs[k];
    auto e2 = harness::build_ensemble(cfg, 0, -1.0, 1.0);
    const auto b = run_sequence(column_inputs(inputs), e2, 0);
    CHECK((a.topRows(30) - b.topRows(30)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.row(30) - b.row(30)).cwiseAbs().maxCoeff() > 0.0);
  }

  TEST_CASE("washout makes the initial state immaterial") {
    const auto cfg = experiment({{"task", "xor"}, {"noise", "none"}});
    const auto inputs = column_inputs(uniform_inputs(80, 6));
    auto e1 = harness::build_ensemble(cfg, 0, 0.0, 1.0);
    auto e2 = harness::build_ensemble(cfg, 0, 0.0, 1.0);
    ReservoirState other = e2.initial_state();
    other.previous.setConstant(0.9);
    const auto a = run_sequence(inputs, e1, 30);
    const auto b = run_sequence(inputs, e2, 30, other);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-6);
  }

  TEST_CASE("rotated quadrature and the qp covariance differ by a constant") {
    auto ens = single(scalar_encoding(0.06, -0.01, 0.03, 0.075), 0.0);
    // Raw observables: reuse the backend directly along the trajectory phases.
    const auto backend = AnalyticBackend::single_mode(0.3);
    auto state = ens.initial_state();
    std::vector<double> gaps;
    for (double s : uniform_inputs(100, 12)) {
      const std::vector<double> in{s};
      const auto d = ens.phases(0, in, state);
      ens.step(in, state);
      const std::vector<double> phase{d(0)};
      const auto sigma = backend->covariance(phase);
      const double rotated = 0.5 * (sigma(0, 0) + sigma(1, 1)) + sigma(0, 1);
      gaps.push_back(rotated - sigma(0, 1));
    }
    for (double g : gaps) CHECK(std::abs(g - gaps.front()) < 1e-8);
  }

  TEST_CASE("noiseless normalised observables stay in the unit interval") {
    for (const char* preset : {"memory_r5", "xor"}) {
      const std::string task = std::string(preset) == "xor" ? "xor" : "memory";
      const auto cfg = experiment({{"task", task}, {"preset", preset}, {"noise", "none"}});
      auto ens = harness::build_ensemble(cfg, 0, -1.0, 1.0);
      const auto O = run_sequence(column_inputs(uniform_inputs(300, 13)), ens, 0);
      CHECK(O.minCoeff() >= -1e-12);
      CHECK(O.maxCoeff() <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("analytic and pipeline backends agree for one segment") {
    for (int modes : {1, 2, 3}) {
      CAPTURE(modes);
      harness::Json base{{"task", "xor"}, {"noise", "none"}, {"modes", modes}, {"twin", "twin_reservoir"}};
      auto analytic_cfg = base;
      analytic_cfg["backend"] = "analytic";
      auto pipeline_cfg = base;
      pipeline_cfg["backend"] = "pipeline";
      auto a = harness::build_ensemble(experiment(analytic_cfg), 0, 0.0, 1.0);
      auto p = harness::build_ensemble(experiment(pipeline_cfg), 0, 0.0, 1.0);
      std::vector<double> bits;
      for (double x : uniform_inputs(40, 14)) bits.push_back(x > 0 ? 1.0 : 0.0);
      const auto Oa = run_sequence(column_inputs(bits), a, 0);
      const auto Op = run_sequence(column_inputs(bits), p, 0);
      CHECK((Oa - Op).cwiseAbs().maxCoeff() < 1e-6);
    }
  }

  TEST_CASE("analytic backend rejects several segments") {
    auto config = harness::load_twin_config("twin_reservoir", ".");
    config.segments = 2;
    const optics::DigitalTwin twin(config);
    CHECK_THROWS_AS(AnalyticBackend::from_twin(twin), DomainError);
  }
}

TEST_SUITE("reservoir.fading_memory") {
  // Noise off, inputs frozen after a random prefix: the last two of 50
  // frozen steps must agree to 1e-6.
  void check_settles(const std::string& task, const std::string& preset) {
    const auto cfg = experiment({{"task", task}, {"preset", preset}, {"noise", "none"}});
    const auto prefix = uniform_inputs(20, 8);
    for (double frozen : {-1.0, 0.0, 0.5, 1.0}) {
      CAPTURE(frozen);
      auto seq = prefix;
      seq.resize(70, frozen);
      auto ens = harness::build_ensemble(cfg, 0, -1.0, 1.0);
      const auto O = run_sequence(column_inputs(seq), ens, 0);
      CHECK((O.row(69) - O.row(68)).cwiseAbs().maxCoeff() < 1e-6);
    }
  }

  TEST_CASE("xor preset settles") { check_settles("xor", "xor"); }
  TEST_CASE("memory_r1 preset settles") { check_settles("memory", "memory_r1"); }
  TEST_CASE("memory_r3 preset settles") { check_settles("memory", "memory_r3"); }
  TEST_CASE("memory_r5 preset settles") { check_settles("memory", "memory_r5"); }
  TEST_CASE("double_scroll preset settles") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CAPTURE(seed);
      const auto cfg = experiment({{"task", "double_scroll"}, {"noise", "none"}});
      Eigen::MatrixXd seq = Eigen::MatrixXd::Constant(70, 3, 0.3);
      seq.topRows(20) = Eigen::MatrixXd::Random(20, 3);
      auto ens = harness::build_ensemble(cfg, seed, -1.0, 1.0);
      const auto O = run_sequence(seq, ens, 0);
      CHECK((O.row(69) - O.row(68)).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_SUITE("reservoir.kernel_quality") {
  TEST_CASE("identical rows have rank zero") {
    Eigen::MatrixXd m(6, 6);
    for (int i = 0; i < 6; ++i) m.row(i) = Eigen::RowVectorXd::LinSpaced(6, 0.0, 1.0);
    CHECK(kernel_quality(m) == 0);
  }

  TEST_CASE("three independent columns plus affine copies") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(9, 9);
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 3; ++j) m(i, j) = g(rng);
    }
    for (int j = 3; j < 9; ++j) m.col(j) = (j - 1.5) * m.col(j % 3) + Eigen::VectorXd::Constant(9, 0.3 * j);
    CHECK(kernel_quality(m) == 3);
  }

  TEST_CASE("single global phase stays at rank two or three for any n") {
    for (int n : {1, 2, 4}) {
      CAPTURE(n);
      const auto cfg = experiment({{"task", "kernel_quality"}, {"modes", n}, {"segments", 1}, {"backend", "analytic"}});
      auto ens = harness::build_ensemble(cfg, 0, -1.0, 1.0);
      const auto d = static_cast<std::size_t>(n * (2 * n + 1));
      const auto O = run_sequence(column_inputs(uniform_inputs(50 + d, 15)), ens, 50);
      CHECK(kernel_quality(O) <= 3);
    }
  }
}

TEST_SUITE("reservoir.noise") {
  std::vector<Eigen::MatrixXd> traces(double sd, int points, int reps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, sd);
    std::vector<Eigen::MatrixXd> out;
    for (int p = 0; p < points; ++p) {
      Eigen::MatrixXd m(reps, 3);
      for (int r = 0; r < reps; ++r) {
        for (int c = 0; c < 3; ++c) m(r, c) = std::sin(p + c) + g(rng);
      }
      out.push_back(m);
    }
    return out;
  }

  TEST_CASE("noiseless traces fit to zero") {
    const auto fit = fit_noise(traces(0.0, 50, 4, 1));
    CHECK(fit.stddev.maxCoeff() < 1e-8);
  }

  TEST_CASE("injected deviation is recovered with and without a model") {
    const auto t = traces(0.05, 200, 5, 2);
    const auto pooled = fit_noise(t);
    Eigen::MatrixXd model(200, 3);
    for (int p = 0; p < 200; ++p) {
      for (int c = 0; c < 3; ++c) model(p, c) = std::sin(p + c);
    }
    const auto about_model = fit_noise(t, model);
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(pooled.stddev(c) - 0.05) <= 0.01);
      CHECK(std::abs(about_model.stddev(c) - 0.05) <= 0.01);
    }
  }

  TEST_CASE("low and average regimes are ordered") {
    const auto low = fit_noise(traces(0.02, 100, 3, 3));
    const auto avg = fit_noise(traces(0.05, 100, 3, 4));
    CHECK((low.stddev.array() < avg.stddev.array()).all());
  }

  TEST_CASE("a single repetition is rejected") {
    CHECK_THROWS_AS(fit_noise(traces(0.05, 10, 1, 5)), DimensionError);
    CHECK_THROWS_AS(NoiseModel::uniform(3, -0.1).validate(), ConfigError);
  }
}
