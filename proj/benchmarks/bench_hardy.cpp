#include <benchmark/benchmark.h>

#include "hardy/eigensolve.hpp"
#include "hardy/exact.hpp"
#include "hardy/hardy.hpp"
#include "hardy/laguerre.hpp"

namespace {

void BM_SturmCount(benchmark::State& state) {
  const hardy::RealTridiagonal t(hardy::build_D(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hardy::sturm_count(t, 0.1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SturmCount)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

void BM_SmallestEigenvalueD(benchmark::State& state) {
  const hardy::RealTridiagonal t(hardy::build_D(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hardy::smallest_eigenvalue(t).lambda_min);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmallestEigenvalueD)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_ContinuousConstant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::continuous_constant(static_cast<std::size_t>(state.range(0))).constant);
  }
}
BENCHMARK(BM_ContinuousConstant)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_DiscreteConstant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::discrete_constant(static_cast<std::size_t>(state.range(0))).constant);
  }
}
BENCHMARK(BM_DiscreteConstant)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_InverseIteration(benchmark::State& state) {
  const hardy::RealTridiagonal t(hardy::build_H(static_cast<std::size_t>(state.range(0))));
  const double lambda = hardy::smallest_eigenvalue(t).lambda_min;
  for (auto _ : state) benchmark::DoNotOptimize(hardy::inverse_iteration(t, lambda).lambda);
}
BENCHMARK(BM_InverseIteration)->Arg(1000)->Arg(100000);

void BM_DetDSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hardy::exact::det_D_seq(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DetDSequence)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Q1Sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hardy::exact::q1_seq(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Q1Sequence)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_QPolynomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hardy::exact::q_polynomial(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_QPolynomial)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GaussLaguerre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hardy::gauss_laguerre(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GaussLaguerre)->Arg(14)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
