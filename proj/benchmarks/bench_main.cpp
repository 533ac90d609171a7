#include <benchmark/benchmark.h>

#include "quintic/cohomology.hpp"
#include "quintic/gallery.hpp"
#include "quintic/kronecker.hpp"
#include "quintic/strata.hpp"

using namespace quintic;

namespace {

GradedMorphism sample(ModuliSpaceId space, Label label) {
  SampleRequest req;
  req.space = space;
  req.label = label;
  req.seed = 1;
  return sample_stratum(req);
}

const CatalogueEntry& entry(std::int64_t i) { return catalogue()[std::size_t(i)]; }

void BM_Determinant(benchmark::State& state) {
  const auto& e = entry(state.range(0));
  const GradedMorphism phi = sample(e.space, e.label);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(phi));
}
BENCHMARK(BM_Determinant)->DenseRange(0, 11);

void BM_Signature(benchmark::State& state) {
  const auto& e = entry(state.range(0));
  const GradedMorphism phi = sample(e.space, e.label);
  for (auto _ : state) benchmark::DoNotOptimize(signature(phi));
}
BENCHMARK(BM_Signature)->DenseRange(0, 11);

void BM_Classify(benchmark::State& state) {
  const auto& e = entry(state.range(0));
  const GradedMorphism phi = sample(e.space, e.label);
  for (auto _ : state) benchmark::DoNotOptimize(classify(e.space, phi));
}
BENCHMARK(BM_Classify)->DenseRange(0, 11);

void BM_SampleStratum(benchmark::State& state) {
  const auto& e = entry(state.range(0));
  SampleRequest req;
  req.space = e.space;
  req.label = e.label;
  for (auto _ : state) {
    ++req.seed;
    benchmark::DoNotOptimize(sample_stratum(req));
  }
}
BENCHMARK(BM_SampleStratum)->DenseRange(0, 11);

void BM_KingEnumeration(benchmark::State& state) {
  const Field f = Field::prime(std::uint32_t(state.range(1)));
  const std::size_t n = std::size_t(state.range(0));
  Rng rng(3);
  FormGrid g(n, std::vector<Form>(n));
  for (auto& row : g)
    for (auto& x : row) x = random_form(f, 1, rng, 0);
  const KroneckerModule psi(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(king_semistable(psi));
}
BENCHMARK(BM_KingEnumeration)->Args({3, 5})->Args({5, 5})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_Stable5x5(benchmark::State& state) {
  const Field f = Field::prime(5);
  Rng rng(4);
  FormGrid g(5, std::vector<Form>(5));
  for (auto& row : g)
    for (auto& x : row) x = random_form(f, 1, rng, 0);
  const KroneckerModule psi(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(stable_5x5(psi));
}
BENCHMARK(BM_Stable5x5);

void BM_StabilizerDimension(benchmark::State& state) {
  const auto& e = entry(state.range(0));
  const GradedMorphism phi = sample(e.space, e.label);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_dimension(phi));
}
BENCHMARK(BM_StabilizerDimension)->DenseRange(0, 11)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
