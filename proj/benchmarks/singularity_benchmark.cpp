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

#include "circulab/ensembles.hpp"
#include "circulab/int_polynomial.hpp"
#include "circulab/singularity.hpp"

namespace {

void BM_EnumerateSingular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circulab::enumerate_singular(n, circulab::kDefaultEnumerationCap, 1));
  state.counters["vectors/s"] =
      benchmark::Counter(static_cast<double>(1ull << n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateSingular)->Arg(16)->Arg(20)->Arg(23)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_TesterRandomVectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const circulab::SingularityTester tester(n);
  circulab::RngStream stream(3, n);
  std::vector<circulab::SignVector> vectors;
  for (int i = 0; i < 256; ++i) vectors.push_back(circulab::SignVector::random(n, stream));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tester.singular(vectors[i++ % vectors.size()]));
}
BENCHMARK(BM_TesterRandomVectors)->Arg(64)->Arg(120)->Arg(1024);

void BM_ExactDivisionRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  circulab::RngStream stream(4, n);
  const auto s = circulab::SignVector::random(n, stream);
  for (auto _ : state) benchmark::DoNotOptimize(circulab::is_singular(s));
}
BENCHMARK(BM_ExactDivisionRoute)->Arg(64)->Arg(120);

void BM_GcdRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  circulab::RngStream stream(5, n);
  const auto s = circulab::SignVector::random(n, stream);
  for (auto _ : state) benchmark::DoNotOptimize(circulab::is_singular_by_gcd(s));
}
BENCHMARK(BM_GcdRoute)->Arg(64)->Arg(120);

void BM_Cyclotomic(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circulab::cyclotomic(m));
}
BENCHMARK(BM_Cyclotomic)->Arg(105)->Arg(2310)->Arg(9699);

}  // namespace
