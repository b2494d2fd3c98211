#include <benchmark/benchmark.h>

#include <vector>

#include "cvqrc/harness/presets.hpp"
#include "cvqrc/learn/double_scroll.hpp"
#include "cvqrc/optics/pipeline.hpp"
#include "cvqrc/reservoir/backend.hpp"
#include "cvqrc/reservoir/ensemble.hpp"

using namespace cvqrc;

namespace {

optics::TwinConfig twin_config(std::size_t modes, std::size_t segments) {
  auto config = harness::load_twin_config("twin_reservoir", ".");
  config.modes = modes;
  config.segments = segments;
  return config;
}

void BM_JsaSchmidt(benchmark::State& state) {
  auto config = twin_config(4, 1);
  config.grid_points = static_cast<std::size_t>(state.range(0));
  const optics::DigitalTwin twin(config);
  const std::vector<double> phases{0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(twin.decompose(phases));
  }
}
BENCHMARK(BM_JsaSchmidt)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_PipelineCovariance(benchmark::State& state) {
  const optics::DigitalTwin twin(twin_config(static_cast<std::size_t>(state.range(0)), 2));
  const std::vector<double> phases{0.1, -0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(twin.covariance(phases));
  }
}
BENCHMARK(BM_PipelineCovariance)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AnalyticStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const optics::DigitalTwin twin(twin_config(n, 1));
  const auto backend = reservoir::AnalyticBackend::from_twin(twin);
  const auto sel = reservoir::ObservableSelection::all_unique(n);
  const auto norm = reservoir::Normalizer::global_phase(backend->overlap(), backend->squeezing(), sel);
  reservoir::EncodingParams e;
  e.alpha = Eigen::VectorXd::Constant(1, 0.2);
  e.beta = Eigen::VectorXd::Zero(1);
  e.mask = Eigen::MatrixXd::Constant(1, 1, 0.5);
  reservoir::Ensemble ens({{e, backend, norm}}, sel, reservoir::NoiseModel::uniform(1, 0.01),
                          reservoir::Ensemble::cross_feedback(1, 0), 1);
  auto s = ens.initial_state();
  const std::vector<double> input{0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ens.step(input, s));
  }
}
BENCHMARK(BM_AnalyticStep)->Arg(1)->Arg(4)->Arg(8);

void BM_DoubleScroll(benchmark::State& state) {
  const learn::DoubleScrollState x0(0.1, 0.2, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(learn::double_scroll_integrate(x0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DoubleScroll)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
