//
// Copyright 2026 The sentanalogy Authors
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
//

#include <cstddef>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "sentanalogy/encoders.h"

namespace sentanalogy {
namespace {

void BM_DctCoefficients(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const std::size_t dim = 300;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim));
  for (auto& r : rows) {
    for (double& x : r) x = normal(rng);
  }
  for (auto _ : state) {
    auto c = DctCoefficients(rows, dim, {k});
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_DctCoefficients)->Args({12, 0})->Args({12, 3})->Args({40, 6});

}  // namespace
}  // namespace sentanalogy
