// Copyright 2026 The nsq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "benchmark/benchmark.h"
#include "nsq/bits.h"
#include "nsq/equivalence.h"
#include "nsq/golay.h"
#include "nsq/search.h"

namespace nsq {
namespace {

void BM_PackedNpaf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const std::uint64_t x = rng() & bits::Mask(n);
  for (auto _ : state) {
    int total = 0;
    for (int s = 1; s < n; ++s) total += bits::Npaf(x, n, s);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_PackedNpaf)->Arg(16)->Arg(32)->Arg(64);

void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto classes = EnumerateClasses(n).classes;
  const PackedQuad q = Apply(ElementaryTransform::kAlternateAll,
                             Apply(ElementaryTransform::kSwapCD,
                                   PackedQuad::From(classes.back().Decode())));
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(q));
}
BENCHMARK(BM_Canonicalize)->Arg(8)->Arg(16)->Arg(20);

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateClasses(n));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_GolayPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GolayPairs(n));
}
BENCHMARK(BM_GolayPairs)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nsq

BENCHMARK_MAIN();
