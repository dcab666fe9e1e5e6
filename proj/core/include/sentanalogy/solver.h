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

#ifndef SENTANALOGY_SOLVER_H_
#define SENTANALOGY_SOLVER_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentanalogy/datagen.h"
#include "sentanalogy/embedding_store.h"

namespace sentanalogy {

enum class Metric { kCosAdd, kCosMul };

// Shape of 3CosAdd. kSumOfCosines scores cos(D,C) + cos(D,B) - cos(D,A);
// kOffset scores cos(D, B - A + C). The two agree in argmax on unit-norm
// items only.
enum class AddForm { kSumOfCosines, kOffset };

enum class TieBreak { kLowestIndex };

struct SolverConfig {
  Metric metric = Metric::kCosAdd;
  // Exclude A, B and C from the candidates.
  bool constrained = true;
  double epsilon = 0.001;
  TieBreak tie_break = TieBreak::kLowestIndex;
  int top_k = 1;
  AddForm add_form = AddForm::kSumOfCosines;
};

// Throws InvalidArgument unless epsilon > 0 and top_k >= 1.
void ValidateSolverConfig(const SolverConfig& config);

Metric ParseMetric(std::string_view name);         // "add" | "mul"
std::string_view MetricName(Metric metric);        // "3CosAdd" | "3CosMul"
std::string_view MetricShortName(Metric metric);   // "add" | "mul"
std::string_view ProtocolName(bool constrained);   // "constrained" | ...

struct Prediction {
  std::string qid;
  std::string predicted;
  double score = 0.0;
  // 1-based rank of the gold item among the scored candidates; absent when
  // the gold item is not a candidate (or is excluded).
  std::optional<std::size_t> rank_of_gold;
  bool correct = false;
  // The top_k best candidates, best first (only filled when top_k > 1).
  std::vector<std::string> top;
  Metric metric = Metric::kCosAdd;
  bool constrained = true;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Counts similarity evaluations that involved a zero-norm vector; those
// similarities are taken as 0.
struct SolverStats {
  std::atomic<std::uint64_t> zero_norm_similarities{0};
};

// Per-pair similarity used by the scorers: cosine, or 0 (counted in `stats`)
// when either vector has zero norm.
double SafeCosine(const EmbeddingTable& table, std::size_t i, std::size_t j,
                  SolverStats* stats = nullptr);

// cos(d,c) + cos(d,b) - cos(d,a), in [-3, 3].
double ScoreCosAdd(const EmbeddingTable& table, std::size_t a, std::size_t b,
                   std::size_t c, std::size_t d, SolverStats* stats = nullptr);

// s(d,c) s(d,b) / (s(d,a) + epsilon) with s = (cos + 1) / 2; non-negative.
double ScoreCosMul(const EmbeddingTable& table, std::size_t a, std::size_t b,
                   std::size_t c, std::size_t d, double epsilon,
                   SolverStats* stats = nullptr);

// cos(d, b - a + c) computed from pairwise dot products.
double ScoreCosAddOffset(const EmbeddingTable& table, std::size_t a,
                         std::size_t b, std::size_t c, std::size_t d,
                         SolverStats* stats = nullptr);

// Answers one question over `candidates` (table indices, in tie-break
// order). Under the constrained protocol A, B and C are removed first.
// Throws UnknownItemError for an unresolvable id and InvalidArgument when no
// candidate remains.
Prediction Solve(const AnalogyQuestion& question, const EmbeddingTable& table,
                 std::span<const std::size_t> candidates,
                 const SolverConfig& config, SolverStats* stats = nullptr);

// Candidate list for each category-pool question: all distinct sentences of
// its category in order of first appearance over (a, b, c, gold_d) in input
// order. Returned as table indices keyed by category.
struct CategoryPools {
  std::vector<std::string> categories;
  std::vector<std::vector<std::size_t>> pools;

  const std::vector<std::size_t>* Find(std::string_view category) const;
};
CategoryPools BuildCategoryPools(const std::vector<AnalogyQuestion>& questions,
                                 const EmbeddingTable& table);

// Resolves the candidate list of `question` (explicit list or its pool).
std::vector<std::size_t> ResolveCandidates(const AnalogyQuestion& question,
                                           const EmbeddingTable& table,
                                           const CategoryPools& pools);

// Same predictions as calling Solve on each question with its resolved
// candidates, in input order, independent of `threads`. Category pools are
// scored through a precomputed pool-by-pool similarity matrix. `threads` = 0
// uses the hardware concurrency.
std::vector<Prediction> SolveBatch(const std::vector<AnalogyQuestion>& questions,
                                   const EmbeddingTable& table,
                                   const SolverConfig& config,
                                   unsigned threads = 0,
                                   SolverStats* stats = nullptr);

std::string ToJsonLine(const Prediction& prediction);
std::vector<Prediction> ReadPredictions(std::istream& in,
                                        std::string_view source);
std::vector<Prediction> LoadPredictions(const std::filesystem::path& path);
void WritePredictions(const std::vector<Prediction>& predictions,
                      std::ostream& out);

}  // namespace sentanalogy

#endif  // SENTANALOGY_SOLVER_H_
