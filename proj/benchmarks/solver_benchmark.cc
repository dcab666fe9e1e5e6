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
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "sentanalogy/datagen.h"
#include "sentanalogy/embedding_store.h"
#include "sentanalogy/solver.h"

namespace sentanalogy {
namespace {

struct Workload {
  EmbeddingTable table;
  std::vector<AnalogyQuestion> questions;
};

// `pairs` sentence pairs in one category with random d-dimensional vectors.
Workload MakeWorkload(std::size_t pairs, std::size_t dim) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;
  std::vector<SentencePair> sentence_pairs;
  for (std::size_t i = 0; i < 2 * pairs; ++i) {
    ids.push_back("s" + std::to_string(i));
    std::vector<double> row(dim);
    for (double& x : row) x = normal(rng);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    sentence_pairs.push_back(
        {.id = std::to_string(i), .category = "c", .s_a = ids[2 * i],
         .s_b = ids[2 * i + 1]});
  }
  return {EmbeddingTable::FromRows(dim, ids, rows),
          ExpandQuestions(sentence_pairs)};
}

void BM_SolveBatch(benchmark::State& state) {
  const Workload w = MakeWorkload(static_cast<std::size_t>(state.range(0)),
                                  static_cast<std::size_t>(state.range(1)));
  SolverConfig config;
  config.metric = state.range(2) ? Metric::kCosMul : Metric::kCosAdd;
  for (auto _ : state) {
    auto preds = SolveBatch(w.questions, w.table, config, 1);
    benchmark::DoNotOptimize(preds.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(w.questions.size()));
}
BENCHMARK(BM_SolveBatch)
    ->Args({138, 300, 0})
    ->Args({138, 300, 1})
    ->Args({400, 300, 0})
    ->Unit(benchmark::kMillisecond);

void BM_SolveSingle(benchmark::State& state) {
  const Workload w = MakeWorkload(static_cast<std::size_t>(state.range(0)), 300);
  const CategoryPools pools = BuildCategoryPools(w.questions, w.table);
  const auto candidates = ResolveCandidates(w.questions[0], w.table, pools);
  std::size_t i = 0;
  for (auto _ : state) {
    auto p = Solve(w.questions[i % w.questions.size()], w.table, candidates, {});
    benchmark::DoNotOptimize(p.score);
    ++i;
  }
}
BENCHMARK(BM_SolveSingle)->Arg(138)->Arg(928);

}  // namespace
}  // namespace sentanalogy
