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

#ifndef SENTANALOGY_EVALUATOR_H_
#define SENTANALOGY_EVALUATOR_H_

#include <cstddef>
#include <map>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sentanalogy/datagen.h"
#include "sentanalogy/solver.h"

namespace sentanalogy {

// One (metric, protocol) column of a result table.
struct ScoringSetting {
  Metric metric = Metric::kCosAdd;
  bool constrained = true;

  friend auto operator<=>(const ScoringSetting&,
                          const ScoringSetting&) = default;
};

// Column heading: "3CosAdd-U", "3CosAdd", "3CosMul-U" or "3CosMul".
std::string SettingName(const ScoringSetting& setting);

struct AccuracyRow {
  std::string category;
  ScoringSetting setting;
  std::size_t correct = 0;
  std::size_t n_questions = 0;

  double accuracy() const;
  friend bool operator==(const AccuracyRow&, const AccuracyRow&) = default;
};

struct AggregateRow {
  ScoringSetting setting;
  std::size_t correct = 0;
  std::size_t n_questions = 0;
  // Sum of correct over sum of questions.
  double micro = 0.0;
  // Unweighted mean of the category accuracies.
  double macro = 0.0;
};

// Share of predictions whose predicted sentence carries each slot label.
struct LabelDistribution {
  std::string category;
  ScoringSetting setting;
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;

  double probability(std::string_view label) const;
};

// Label used for predicted sentences that are not a side of any pair.
inline constexpr std::string_view kUnlabeled = "unlabeled";

struct EvaluationReport {
  // Categories in order of first appearance in the question set.
  std::vector<std::string> categories;
  // Questions per category, same order as `categories`.
  std::vector<std::size_t> category_sizes;
  // Settings present in the predictions, in column order.
  std::vector<ScoringSetting> settings;
  // Ordered by category, then setting.
  std::vector<AccuracyRow> rows;
  std::vector<AggregateRow> aggregates;
  std::vector<LabelDistribution> label_distributions;

  const AccuracyRow* Find(std::string_view category,
                          const ScoringSetting& setting) const;
};

// Per (category, setting) accuracy. Throws UnknownItemError when a
// prediction's qid is not in `questions`.
std::vector<AccuracyRow> Accuracy(const std::vector<Prediction>& predictions,
                                  const std::vector<AnalogyQuestion>& questions);

// Micro and macro aggregate of `rows` per setting.
std::vector<AggregateRow> Aggregate(const std::vector<AccuracyRow>& rows);

// Per (category, setting) distribution of the slot label of the predicted
// sentence, looked up in `pairs`.
std::vector<LabelDistribution> LabelProbability(
    const std::vector<Prediction>& predictions,
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<SentencePair>& pairs);

// Accuracy, aggregates and, when `pairs` is non-empty, label distributions.
EvaluationReport BuildReport(const std::vector<Prediction>& predictions,
                             const std::vector<AnalogyQuestion>& questions,
                             const std::vector<SentencePair>& pairs = {});

enum class ReportFormat { kCsv, kJson, kMarkdown };
ReportFormat ParseReportFormat(std::string_view name);

// Fixed four-decimal rendering with a period separator.
std::string FormatAccuracy(double value);

// The accuracy table: one row per category with one column per setting,
// followed by "micro" and "macro" rows. JSON additionally carries counts and
// label distributions; markdown appends the label table when present.
void EmitReport(const EvaluationReport& report, ReportFormat format,
                std::ostream& out);

// `category,metric,protocol,label,count,probability` rows.
void EmitLabelDistributions(const EvaluationReport& report, std::ostream& out);

}  // namespace sentanalogy

#endif  // SENTANALOGY_EVALUATOR_H_
