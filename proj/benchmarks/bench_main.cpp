#include <benchmark/benchmark.h>

#include "tfp/bias.hpp"
#include "tfp/graphon.hpp"
#include "tfp/mc_engine.hpp"
#include "tfp/sparse_models.hpp"
#include "tfp/star_graph.hpp"

namespace {

using namespace tfp;

void BM_TriangleCountsErrg(benchmark::State& state) {
  const auto g = sample_errg(ErrgParams::from_lambda(state.range(0), 4.0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_counts(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TriangleCountsErrg)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_TriangleCountsDense(benchmark::State& state) {
  const auto g = sample_graphon_graph(state.range(0), ConstantGraphon{0.3}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_counts(g));
}
BENCHMARK(BM_TriangleCountsDense)->Arg(100)->Arg(200)->Arg(400);

void BM_AverageBiasF64(benchmark::State& state) {
  const auto g = sample_errg(ErrgParams::from_lambda(state.range(0), 2.0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(average_triangle_bias_f64(g));
}
BENCHMARK(BM_AverageBiasF64)->Arg(1000)->Arg(10000);

void BM_ExactTriangleBias(benchmark::State& state) {
  const auto g = sample_errg(ErrgParams::from_lambda(state.range(0), 4.0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_bias(g));
}
BENCHMARK(BM_ExactTriangleBias)->Arg(100)->Arg(1000);

void BM_PcsClosedForm(benchmark::State& state) {
  const auto specs = enumerate_pcs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& s : specs) benchmark::DoNotOptimize(pcs_closed_form(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(specs.size()));
}
BENCHMARK(BM_PcsClosedForm)->Arg(15)->Arg(25);

void BM_PcsDirect(benchmark::State& state) {
  const auto specs = enumerate_pcs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& s : specs) benchmark::DoNotOptimize(triangle_bias(build_pcs(s)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(specs.size()));
}
BENCHMARK(BM_PcsDirect)->Arg(15);

void BM_NbDecomposition(benchmark::State& state) {
  const PcsInstance a(PcsSpec::make(1, 1, {5}));
  const PcsInstance b(PcsSpec::make(0, 3, {2}));
  for (auto _ : state) benchmark::DoNotOptimize(nb_decomposition(a, 4, b, 1));
}
BENCHMARK(BM_NbDecomposition);

void BM_SampleErrg(benchmark::State& state) {
  const auto params = ErrgParams::from_lambda(state.range(0), 2.0);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_errg(params, rng));
}
BENCHMARK(BM_SampleErrg)->Arg(1000)->Arg(100000);

void BM_SampleCm(benchmark::State& state) {
  const auto ds = DegreeSequence::from_named("regular:3", state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_cm(ds, rng));
}
BENCHMARK(BM_SampleCm)->Arg(1000)->Arg(100000);

void BM_SampleGraphon(benchmark::State& state) {
  const TwoBlockGraphon tb{0.1, 0.3, 0.8, 0.4};
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_graphon_graph(state.range(0), tb, rng));
}
BENCHMARK(BM_SampleGraphon)->Arg(100)->Arg(400);

void BM_ChiQuadrature(benchmark::State& state) {
  const FunctionGraphon f{[](double x, double y) { return 0.2 + 0.6 * x * y; }, {}, "smooth"};
  for (auto _ : state) benchmark::DoNotOptimize(chi_t_quadrature(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ChiQuadrature)->Arg(128)->Arg(256)->Arg(512);

void BM_CmExactMean(benchmark::State& state) {
  const auto ds = DegreeSequence::from_named("two-point:2,5,0.5", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cm_exact_mean_tfb_exact(ds));
}
BENCHMARK(BM_CmExactMean)->Arg(100)->Arg(10000);

void BM_RunMc(benchmark::State& state) {
  const ExperimentConfig cfg{ErrgModel{ErrgParams::from_lambda(50, 2.0)}, Statistic::average(), 1000, 1,
                             static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_mc(cfg));
}
BENCHMARK(BM_RunMc)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
