// Copyright 2026 The circulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "circulab/dft.hpp"
#include "circulab/ensembles.hpp"

namespace {

using circulab::Complex;

std::vector<Complex> random_row(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  std::vector<Complex> x(n);
  for (auto& v : x) v = {g(rng), g(rng)};
  return x;
}

void BM_PlannedTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const circulab::FourierPlan plan(n);
  const auto in = random_row(n);
  std::vector<Complex> out(n);
  for (auto _ : state) {
    plan.forward(in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PlannedTransform)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_PlannedTransform)->Arg(1155)->Arg(4099)->Arg(10007);

void BM_DirectTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const circulab::EntryVector row(random_row(n));
  for (auto _ : state) benchmark::DoNotOptimize(circulab::eigenvalues_direct(row, circulab::Normalization::kUnit));
}
BENCHMARK(BM_DirectTransform)->Arg(256)->Arg(1024);

void BM_HermitianSpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const circulab::FourierPlan plan(n);
  circulab::RngStream stream(1, 0);
  const auto row = circulab::sample_row({circulab::EnsembleKind::kHermitianCirculant, n, 1}, stream);
  for (auto _ : state) benchmark::DoNotOptimize(circulab::hermitian_spectrum(row, plan));
}
BENCHMARK(BM_HermitianSpectrum)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
