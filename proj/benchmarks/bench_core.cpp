#include <benchmark/benchmark.h>

#include "k3bott/delpezzo.hpp"
#include "k3bott/verdict.hpp"

using namespace k3bott;

namespace {

const IntegralLattice kDeg62 = IntegralLattice::from_ints({{2, 5}, {5, 10}});
const IntegralLattice kUnigonal = IntegralLattice::from_ints({{-2, 1}, {1, 0}});

void BM_isotropic_window(benchmark::State& state) {
  const DivisorClass b{1, 2};
  const EnumerationQuery q{Int(0), Int(1), Int(state.range(0)), b, false};
  for (auto _ : state) {
    auto classes = enumerate_classes(kDeg62, q);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_isotropic_window)->Arg(100)->Arg(1000);

void BM_wall_search_unigonal(benchmark::State& state) {
  const DivisorClass b{1, 201};  // B^2 = 400
  const EnumerationQuery q{Int(-2), Int(0), Int(state.range(0)), b, false};
  for (auto _ : state) {
    auto classes = enumerate_classes(kUnigonal, q);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_wall_search_unigonal)->Arg(50)->Arg(500);

void BM_signature_rank20(benchmark::State& state) {
  // U + 18 copies of <-2>
  std::vector<std::vector<Int>> gram(20, std::vector<Int>(20, 0));
  gram[0][1] = gram[1][0] = 1;
  for (int i = 2; i < 20; ++i) gram[i][i] = -2;
  const IntegralLattice lat(std::move(gram));
  for (auto _ : state) {
    auto sig = signature(lat);
    benchmark::DoNotOptimize(sig);
  }
}
BENCHMARK(BM_signature_rank20);

void BM_bott_verdict_unigonal(benchmark::State& state) {
  const PolarizedLattice pol(kUnigonal, DivisorClass{1, 21});
  FibrationData data;
  data.fiber_class = DivisorClass{0, 1};
  data.singular_fibers = {{KodairaType::make_In(1), 24}};
  const std::vector<FibrationData> fibs{data};
  for (auto _ : state) {
    auto verdict = bott_verdict(pol, fibs);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_bott_verdict_unigonal);

void BM_minus_one_curves(benchmark::State& state) {
  const DelPezzoLattice dp(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto curves = minus_one_curves(dp);
    benchmark::DoNotOptimize(curves);
  }
}
// degree 1 has 240 classes in rank 9, the stress case
BENCHMARK(BM_minus_one_curves)->Arg(5)->Arg(2)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
