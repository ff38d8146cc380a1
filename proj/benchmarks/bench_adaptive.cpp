#include <benchmark/benchmark.h>

#include <random>

#include "amlink/adaptive.hpp"
#include "amlink/baseline.hpp"
#include "amlink/fixtures.hpp"

namespace {

amlink::NormalizedDataset random_points(std::size_t n, std::size_t p) {
  std::mt19937_64 rng(n * 131 + p);
  std::normal_distribution<double> gauss;
  std::vector<std::string> labels;
  std::vector<std::string> columns;
  std::vector<double> values(n * p);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (std::size_t k = 0; k < p; ++k) columns.push_back("c" + std::to_string(k));
  for (auto& v : values) v = gauss(rng);
  return amlink::normalize(amlink::Dataset(labels, columns, values));
}

void BM_DistanceMatrix(benchmark::State& state) {
  const auto nd = random_points(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlink::distance_matrix(nd));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_AdaptiveBuild(benchmark::State& state) {
  const auto nd = random_points(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlink::build_dendrogram(nd));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AdaptiveBuild)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_StepwiseAverage(benchmark::State& state) {
  const auto nd = random_points(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlink::stepwise_cluster(nd, amlink::LinkageMethod::Average));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StepwiseAverage)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SubstituentFixture(benchmark::State& state) {
  const auto nd = amlink::normalize(amlink::substituent_dataset(amlink::Site::Para));
  for (auto _ : state) {
    benchmark::DoNotOptimize(amlink::build_dendrogram(nd));
  }
}
BENCHMARK(BM_SubstituentFixture);

}  // namespace

BENCHMARK_MAIN();
