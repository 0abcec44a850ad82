#include <benchmark/benchmark.h>

#include "wreathhom/counting.hpp"
#include "wreathhom/oracle.hpp"
#include "wreathhom/sampler.hpp"

namespace {

using namespace wreathhom;

void BM_BuildModel(benchmark::State &state) {
  auto group = symmetric_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_wreath_model(group, AbelianGroup({2})));
}
BENCHMARK(BM_BuildModel)->Arg(3)->Arg(4);

void BM_HomCountWreath(benchmark::State &state) {
  auto model = build_wreath_model(builtin_group("S3"), AbelianGroup({2}));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_count_wreath(model, n));
}
BENCHMARK(BM_HomCountWreath)->Arg(100)->Arg(1000)->Arg(5000);

void BM_HomCountDirect(benchmark::State &state) {
  auto model = build_wreath_model(builtin_group("S3"), AbelianGroup({2}));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_count_direct(model, n));
}
BENCHMARK(BM_HomCountDirect)->Arg(20)->Arg(40);

void BM_DeltaSeries(benchmark::State &state) {
  auto model = build_wreath_model(builtin_group("V4"), AbelianGroup({2}));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_series(model, n));
}
BENCHMARK(BM_DeltaSeries)->Arg(100)->Arg(300);

void BM_Sample(benchmark::State &state) {
  auto model = build_wreath_model(builtin_group("S3"), AbelianGroup({3}));
  HomSampler sampler(model, static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_hom(rng));
}
BENCHMARK(BM_Sample)->Arg(10)->Arg(100)->Arg(1000);

void BM_EnumerateHoms(benchmark::State &state) {
  auto group = builtin_group("S3");
  ExplicitWreath target(AbelianGroup({2}), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(group, target, {.workers = 1}));
}
BENCHMARK(BM_EnumerateHoms)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
