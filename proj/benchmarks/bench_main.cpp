#include "iskk/crossed.hpp"
#include "iskk/induction.hpp"
#include "iskk/ktheory.hpp"
#include "iskk/l2.hpp"

#include <benchmark/benchmark.h>

using namespace iskk;

namespace {

  SpectrumPtr spectrum(std::string const& spec) {
    return std::make_shared<Spectrum const>(std::make_shared<FiniteInvSgp const>(build_spec(spec)));
  }

  std::string rook(benchmark::State const& state) {
    return "symmetric_inverse:" + std::to_string(state.range(0));
  }

}  // namespace

static void BM_Build(benchmark::State& state) {
  auto spec = rook(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spec(spec));
  }
}
BENCHMARK(BM_Build)->DenseRange(2, 3);

static void BM_GramPsd(benchmark::State& state) {
  auto x = spectrum(rook(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_psd(gram(*x)).passed());
  }
}
BENCHMARK(BM_GramPsd)->DenseRange(2, 3);

static void BM_Crossed(benchmark::State& state) {
  auto G = ActingSet::plain(spectrum(rook(state)));
  auto a = c0x(G);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossed(a, CrossedKind::universal).algebra.dim());
  }
}
BENCHMARK(BM_Crossed)->DenseRange(2, 3);

static void BM_ExactBlocks(benchmark::State& state) {
  auto a = crossed(trivial_algebra(ActingSet::plain(spectrum(rook(state)))),
                   CrossedKind::universal).algebra;
  for (auto _ : state) {
    benchmark::DoNotOptimize(blocks(a, false).count());
  }
}
BENCHMARK(BM_ExactBlocks)->DenseRange(2, 3);

static void BM_NumericBlocks(benchmark::State& state) {
  auto a = crossed(trivial_algebra(ActingSet::plain(spectrum(rook(state)))),
                   CrossedKind::universal).algebra;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_blocks(a).count());
  }
}
BENCHMARK(BM_NumericBlocks)->DenseRange(2, 3);

static void BM_ThetaResInd(benchmark::State& state) {
  auto x = spectrum(rook(state));
  auto G = ActingSet::plain(x);
  auto H = assoc_groupoid(x, x->semigroup().idempotent_set());
  auto b = c0x(G);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_res_ind(G, H, b).report.passed());
  }
}
BENCHMARK(BM_ThetaResInd)->DenseRange(2, 3);

static void BM_Imprimitivity(benchmark::State& state) {
  auto x  = spectrum(rook(state));
  auto hp = x->semigroup().idempotent_set();
  auto f  = unit_space_algebra(assoc_groupoid(x, hp));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_imprimitivity(x, hp, f).passed());
  }
}
BENCHMARK(BM_Imprimitivity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
