#include <benchmark/benchmark.h>

#include "eraser/models/mzi.hpp"
#include "eraser/models/twoslit.hpp"
#include "eraser/qcore/measure.hpp"
#include "eraser/runner/runner.hpp"

using namespace eraser;

namespace {

void BM_ApplyUnitary2x2(benchmark::State& state) {
  const auto psi = models::mzi_final_state(models::MziModel{});
  const auto u = models::mzi_bs2_unitary(models::PhaseConvention::kRedefined);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_unitary(psi, u));
  }
}
BENCHMARK(BM_ApplyUnitary2x2);

void BM_SampleMziTrial(benchmark::State& state) {
  const runner::MeasurementSchedule schedule{
      runner::Order::kDelayed, runner::WwdBasis::kX,
      runner::QuantonBasis::kDetector};
  const auto setup = runner::make_setup(models::MziModel{}, schedule);
  std::int64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        runner::run_trial(setup, schedule, trial++, runner::RngSpec{1}));
  }
}
BENCHMARK(BM_SampleMziTrial);

void BM_TwoSlitModelTables(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        models::TwoSlitModel::with_default_geometry(
            static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TwoSlitModelTables)->Arg(201)->Arg(1001);

void BM_TwoSlitTrial(benchmark::State& state) {
  const auto model = models::TwoSlitModel::with_default_geometry();
  const runner::MeasurementSchedule schedule{
      runner::Order::kDelayed, runner::WwdBasis::kX,
      runner::QuantonBasis::kScreen};
  const auto setup = runner::make_setup(model, schedule);
  std::int64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        runner::run_trial(setup, schedule, trial++, runner::RngSpec{2}));
  }
}
BENCHMARK(BM_TwoSlitTrial);

void BM_ScreenDistribution(benchmark::State& state) {
  const auto model = models::TwoSlitModel::with_default_geometry();
  const auto psi = models::twoslit_state(model);
  const auto screen = models::screen_bin_basis(model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome_probabilities(psi, screen));
  }
}
BENCHMARK(BM_ScreenDistribution);

}  // namespace

BENCHMARK_MAIN();
