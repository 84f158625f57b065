// Copyright 2026 The dddepth authors.
//
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

#include <benchmark/benchmark.h>

#include <vector>

#include "ddd/depth.hpp"
#include "ddd/distributions.hpp"
#include "ddd/rng.hpp"

namespace {

using namespace ddd;

DataMatrix normal_sample(std::size_t n, std::uint64_t stream) {
  Rng rng(7, stream);
  return ReferenceDistribution::standard_normal(2).sample(n, rng);
}

void BM_DepthSweep2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DataMatrix sample = normal_sample(n, 0);
  DataMatrix queries = normal_sample(256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_sweep_2d(sample, queries.row(i & 255)));
    ++i;
  }
}
BENCHMARK(BM_DepthSweep2D)->Arg(50)->Arg(100)->Arg(1000)->Arg(5000);

void BM_DepthEnumeration2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DataMatrix sample = normal_sample(n, 0);
  DataMatrix queries = normal_sample(256, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_exact_2d(sample, queries.row(i & 255)));
    ++i;
  }
}
BENCHMARK(BM_DepthEnumeration2D)->Arg(50)->Arg(100)->Arg(400);

void BM_DepthApprox(benchmark::State& state) {
  const auto dims = static_cast<std::size_t>(state.range(0));
  Rng rng(7, 2);
  DataMatrix sample = ReferenceDistribution::standard_normal(dims).sample(100, rng);
  DirectionSet dirs = sample_unit_sphere(dims, 5000, rng);
  DataMatrix queries = ReferenceDistribution::standard_normal(dims).sample(64, rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_approx(sample, queries.row(i & 63), dirs));
    ++i;
  }
}
BENCHMARK(BM_DepthApprox)->Arg(2)->Arg(6)->Arg(10);

void BM_UnivariateDepth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7, 3);
  DataMatrix sample = ReferenceDistribution::standard_normal(1).sample(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(depth_univariate(sample, 0.25));
  }
}
BENCHMARK(BM_UnivariateDepth)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
