#include <benchmark/benchmark.h>

#include <mubcorr/mubcorr.hpp>

using namespace mubcorr;

namespace {

OptimizerConfig bench_config() {
  OptimizerConfig cfg;
  cfg.seed = 1;
  return cfg;
}

void BM_Holevo(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density_matrix(d, d, d * d, 5);
  const Basis b(haar_unitary(d, 9));
  for (auto _ : state) benchmark::DoNotOptimize(holevo(rho, b));
}
BENCHMARK(BM_Holevo)->Arg(2)->Arg(3)->Arg(5);

void BM_MeasureC(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density_matrix(d, d, d * d, 5);
  const OptimizerConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(measure_C(rho, cfg).value);
}
BENCHMARK(BM_MeasureC)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MeasureQ2(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix(2, 2, 4, 5);
  const OptimizerConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(measure_Q2(rho, cfg).value);
}
BENCHMARK(BM_MeasureQ2)->Unit(benchmark::kMillisecond);

void BM_ClassicalC1(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density_matrix(d, d, d * d, 5);
  const OptimizerConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(classical_correlation_C1(rho, cfg).value);
}
BENCHMARK(BM_ClassicalC1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix(2, 2, 2, 7);
  const OptimizerConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_mub_pair(rho, cfg).chi_1);
}
BENCHMARK(BM_Witness)->Unit(benchmark::kMillisecond);

void BM_ClosedFormWerner(benchmark::State& state) {
  double alpha = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_werner(3, alpha));
    alpha = alpha > 0.99 ? -1.0 : alpha + 0.01;
  }
}
BENCHMARK(BM_ClosedFormWerner);

void BM_EfTwoQubit(benchmark::State& state) {
  const DensityMatrix rho = random_density_matrix(2, 2, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(ef_two_qubit(rho));
}
BENCHMARK(BM_EfTwoQubit);

}  // namespace

BENCHMARK_MAIN();
