#include <benchmark/benchmark.h>

#include "rescale/bench.hpp"
#include "rescale/bicubic.hpp"
#include "rescale/fuzzy.hpp"
#include "rescale/sk.hpp"

namespace {

rescale::GrayImage source(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return rescale::bench::synthetic_image(n, n, 7);
}

void BM_FuzzyMagnify(benchmark::State& state) {
  const auto img = source(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rescale::fuzzy::magnify(img, {1, 0.6}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_FuzzyMagnify)->Arg(64)->Arg(171)->Unit(benchmark::kMillisecond);

void BM_Bicubic(benchmark::State& state) {
  const auto img = source(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rescale::bicubic::bicubic_resize(img, 3 * img.rows(), 3 * img.cols()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_Bicubic)->Arg(64)->Arg(171)->Unit(benchmark::kMillisecond);

void BM_SkRescale(benchmark::State& state) {
  const auto img = source(state);
  const rescale::sk::SkParams params{static_cast<double>(state.range(1)),
                                     rescale::sk::Kernel2D(rescale::sk::make_jackson(12, 1.0)), 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rescale::sk::sk_rescale(img, params));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}
BENCHMARK(BM_SkRescale)->Args({64, 15})->Args({64, 25})->Args({171, 15})->Unit(benchmark::kMillisecond);

void BM_JacksonNormalization(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rescale::sk::normalization_coefficient(static_cast<int>(state.range(0)), 1.0));
  }
}
BENCHMARK(BM_JacksonNormalization)->Arg(4)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
