#include <iqc/coproduct.hpp>
#include <iqc/iqg.hpp>
#include <iqc/rankone.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_BuildGenerators(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iqc::build_generators(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildGenerators)->DenseRange(2, 5);

void BM_SerreProduct(benchmark::State& state) {
  const auto t = iqc::build_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(t.b(1) * t.b(1) * t.b(2));
}
BENCHMARK(BM_SerreProduct)->DenseRange(2, 5);

void BM_Relations(benchmark::State& state) {
  iqc::set_thread_limit(1);
  const auto t = iqc::build_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iqc::verify_relations(t));
}
BENCHMARK(BM_Relations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MutateGenerator(benchmark::State& state) {
  const auto t = iqc::build_generators(static_cast<int>(state.range(0)));
  const int vertex = t.sigma.x(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(iqc::mutate_element(t.b(1), vertex));
}
BENCHMARK(BM_MutateGenerator)->DenseRange(2, 5);

void BM_TheoremBraid(benchmark::State& state) {
  iqc::set_thread_limit(1);
  const auto t = iqc::build_generators(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iqc::verify_theorem_braid(t));
}
BENCHMARK(BM_TheoremBraid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PBW(benchmark::State& state) {
  const auto t = iqc::build_generators(3);
  for (auto _ : state) benchmark::DoNotOptimize(iqc::verify_pbw(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PBW)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Coideal(benchmark::State& state) {
  iqc::set_thread_limit(1);
  const auto c = iqc::build_coideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iqc::verify_coideal(c));
}
BENCHMARK(BM_Coideal)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_QuasiK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iqc::verify_klog(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuasiK)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
