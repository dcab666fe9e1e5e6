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

#include "sentanalogy/evaluator.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <unordered_map>

#include "jsonl.h"
#include "sentanalogy/error.h"

namespace sentanalogy {

using internal::Json;

namespace {

struct GroupKey {
  std::size_t category;
  ScoringSetting setting;

  auto operator<=>(const GroupKey&) const = default;
};

std::unordered_map<std::string_view, std::size_t> IndexQuestions(
    const std::vector<AnalogyQuestion>& questions) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    if (!index.emplace(questions[i].qid, i).second) {
      throw InvalidArgument("duplicate question id '" + questions[i].qid + "'");
    }
  }
  return index;
}

// Category names in order of first appearance, with question counts.
void CollectCategories(const std::vector<AnalogyQuestion>& questions,
                       std::vector<std::string>* names,
                       std::vector<std::size_t>* sizes) {
  std::unordered_map<std::string_view, std::size_t> slot;
  for (const auto& q : questions) {
    auto [it, inserted] = slot.try_emplace(q.category, names->size());
    if (inserted) {
      names->push_back(q.category);
      sizes->push_back(0);
    }
    ++(*sizes)[it->second];
  }
}

const AnalogyQuestion& MatchQuestion(
    const Prediction& p,
    const std::unordered_map<std::string_view, std::size_t>& index,
    const std::vector<AnalogyQuestion>& questions) {
  auto it = index.find(p.qid);
  if (it == index.end()) {
    throw UnknownItemError("prediction for unknown question '" + p.qid + "'");
  }
  return questions[it->second];
}

std::string Fixed(double value, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

// JSON number that prints with the same digits as the table.
Json Rounded(double value) {
  const std::string text = FormatAccuracy(value);
  double parsed = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return Json(parsed);
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string MarkdownField(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

const AggregateRow* FindAggregate(const EvaluationReport& report,
                                  const ScoringSetting& setting) {
  for (const auto& a : report.aggregates) {
    if (a.setting == setting) return &a;
  }
  return nullptr;
}

// Table cells: one row per category plus micro and macro, one column per
// setting. Missing cells are empty.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> body;
};

Table AccuracyTable(const EvaluationReport& report) {
  Table t;
  t.header = {"category", "n_questions"};
  for (const auto& s : report.settings) t.header.push_back(SettingName(s));
  for (std::size_t c = 0; c < report.categories.size(); ++c) {
    std::vector<std::string> row = {report.categories[c],
                                    std::to_string(report.category_sizes[c])};
    for (const auto& s : report.settings) {
      const AccuracyRow* r = report.Find(report.categories[c], s);
      row.push_back(r != nullptr ? FormatAccuracy(r->accuracy()) : "");
    }
    t.body.push_back(std::move(row));
  }
  if (report.categories.empty()) return t;
  std::size_t total = 0;
  for (std::size_t n : report.category_sizes) total += n;
  for (const char* kind : {"micro", "macro"}) {
    std::vector<std::string> row = {kind, std::to_string(total)};
    for (const auto& s : report.settings) {
      const AggregateRow* a = FindAggregate(report, s);
      const double v = std::string_view(kind) == "micro" ? a->micro : a->macro;
      row.push_back(FormatAccuracy(v));
    }
    t.body.push_back(std::move(row));
  }
  return t;
}

void EmitCsv(const Table& t, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << CsvField(cells[i]);
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& row : t.body) line(row);
}

void EmitMarkdownTable(const Table& t, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << MarkdownField(c) << " |";
    out << '\n';
  };
  line(t.header);
  out << '|';
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    out << (i == 0 ? " --- |" : " ---: |");
  }
  out << '\n';
  for (const auto& row : t.body) line(row);
}

Table LabelTable(const EvaluationReport& report) {
  Table t;
  t.header = {"category", "metric", "protocol", "label", "count",
              "probability"};
  for (const auto& d : report.label_distributions) {
    for (const auto& [label, count] : d.counts) {
      t.body.push_back({d.category, std::string(MetricName(d.setting.metric)),
                        std::string(ProtocolName(d.setting.constrained)),
                        label, std::to_string(count),
                        FormatAccuracy(d.probability(label))});
    }
  }
  return t;
}

}  // namespace

std::string SettingName(const ScoringSetting& setting) {
  std::string name(MetricName(setting.metric));
  if (!setting.constrained) name += "-U";
  return name;
}

double AccuracyRow::accuracy() const {
  return n_questions == 0 ? 0.0
                          : static_cast<double>(correct) /
                                static_cast<double>(n_questions);
}

double LabelDistribution::probability(std::string_view label) const {
  auto it = counts.find(std::string(label));
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

const AccuracyRow* EvaluationReport::Find(
    std::string_view category, const ScoringSetting& setting) const {
  for (const auto& r : rows) {
    if (r.category == category && r.setting == setting) return &r;
  }
  return nullptr;
}

std::vector<AccuracyRow> Accuracy(const std::vector<Prediction>& predictions,
                                  const std::vector<AnalogyQuestion>& questions) {
  const auto index = IndexQuestions(questions);
  std::vector<std::string> names;
  std::vector<std::size_t> sizes;
  CollectCategories(questions, &names, &sizes);
  std::unordered_map<std::string_view, std::size_t> category_slot;
  for (std::size_t i = 0; i < names.size(); ++i) {
    category_slot.emplace(names[i], i);
  }

  std::map<GroupKey, AccuracyRow> groups;
  std::set<std::pair<std::size_t, ScoringSetting>> seen;
  for (const auto& p : predictions) {
    const AnalogyQuestion& q = MatchQuestion(p, index, questions);
    const ScoringSetting setting{p.metric, p.constrained};
    if (!seen.emplace(index.at(p.qid), setting).second) {
      throw InvalidArgument("duplicate prediction for question '" + p.qid +
                            "' under " + SettingName(setting));
    }
    const GroupKey key{category_slot.at(q.category),
                       {p.metric, p.constrained}};
    AccuracyRow& row = groups[key];
    row.category = q.category;
    row.setting = key.setting;
    ++row.n_questions;
    if (p.predicted == q.gold_d) ++row.correct;
  }
  std::vector<AccuracyRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, row] : groups) rows.push_back(std::move(row));
  return rows;
}

std::vector<AggregateRow> Aggregate(const std::vector<AccuracyRow>& rows) {
  std::map<ScoringSetting, std::vector<const AccuracyRow*>> by_setting;
  for (const auto& r : rows) by_setting[r.setting].push_back(&r);
  std::vector<AggregateRow> out;
  for (const auto& [setting, members] : by_setting) {
    AggregateRow a;
    a.setting = setting;
    double sum = 0.0;
    for (const AccuracyRow* r : members) {
      a.correct += r->correct;
      a.n_questions += r->n_questions;
      sum += r->accuracy();
    }
    a.micro = a.n_questions == 0 ? 0.0
                                 : static_cast<double>(a.correct) /
                                       static_cast<double>(a.n_questions);
    a.macro = sum / static_cast<double>(members.size());
    out.push_back(a);
  }
  return out;
}

std::vector<LabelDistribution> LabelProbability(
    const std::vector<Prediction>& predictions,
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<SentencePair>& pairs) {
  const auto index = IndexQuestions(questions);
  std::vector<std::string> names;
  std::vector<std::size_t> sizes;
  CollectCategories(questions, &names, &sizes);
  std::unordered_map<std::string_view, std::size_t> category_slot;
  for (std::size_t i = 0; i < names.size(); ++i) {
    category_slot.emplace(names[i], i);
  }
  // The first pair that mentions a sentence decides its label.
  std::unordered_map<std::string_view, std::string_view> labels;
  for (const auto& pair : pairs) {
    labels.try_emplace(pair.s_a, pair.label_a);
    labels.try_emplace(pair.s_b, pair.label_b);
  }

  std::map<GroupKey, LabelDistribution> groups;
  for (const auto& p : predictions) {
    const AnalogyQuestion& q = MatchQuestion(p, index, questions);
    const GroupKey key{category_slot.at(q.category),
                       {p.metric, p.constrained}};
    LabelDistribution& d = groups[key];
    d.category = q.category;
    d.setting = key.setting;
    auto it = labels.find(p.predicted);
    const std::string_view label =
        it == labels.end() ? kUnlabeled : it->second;
    ++d.counts[std::string(label)];
    ++d.total;
  }
  std::vector<LabelDistribution> out;
  out.reserve(groups.size());
  for (auto& [key, d] : groups) out.push_back(std::move(d));
  return out;
}

EvaluationReport BuildReport(const std::vector<Prediction>& predictions,
                             const std::vector<AnalogyQuestion>& questions,
                             const std::vector<SentencePair>& pairs) {
  EvaluationReport report;
  CollectCategories(questions, &report.categories, &report.category_sizes);
  report.rows = Accuracy(predictions, questions);
  report.aggregates = Aggregate(report.rows);
  std::set<ScoringSetting> settings;
  for (const auto& r : report.rows) settings.insert(r.setting);
  report.settings.assign(settings.begin(), settings.end());
  if (!pairs.empty()) {
    report.label_distributions = LabelProbability(predictions, questions, pairs);
  }
  return report;
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

std::string FormatAccuracy(double value) { return Fixed(value, 4); }

void EmitReport(const EvaluationReport& report, ReportFormat format,
                std::ostream& out) {
  switch (format) {
    case ReportFormat::kCsv:
      EmitCsv(AccuracyTable(report), out);
      return;
    case ReportFormat::kMarkdown:
      EmitMarkdownTable(AccuracyTable(report), out);
      if (!report.label_distributions.empty()) {
        out << '\n';
        EmitMarkdownTable(LabelTable(report), out);
      }
      return;
    case ReportFormat::kJson:
      break;
  }
  Json categories = Json::array();
  for (std::size_t c = 0; c < report.categories.size(); ++c) {
    Json accuracy = Json::object();
    Json correct = Json::object();
    for (const auto& s : report.settings) {
      const AccuracyRow* r = report.Find(report.categories[c], s);
      if (r == nullptr) continue;
      accuracy[SettingName(s)] = Rounded(r->accuracy());
      correct[SettingName(s)] = r->correct;
    }
    categories.push_back({{"category", report.categories[c]},
                          {"n_questions", report.category_sizes[c]},
                          {"accuracy", accuracy},
                          {"correct", correct}});
  }
  Json aggregates = Json::object();
  for (const auto& a : report.aggregates) {
    aggregates[SettingName(a.setting)] = {{"micro", Rounded(a.micro)},
                                          {"macro", Rounded(a.macro)},
                                          {"correct", a.correct},
                                          {"n_questions", a.n_questions}};
  }
  Json labels = Json::array();
  for (const auto& d : report.label_distributions) {
    Json probs = Json::object();
    for (const auto& [label, count] : d.counts) {
      probs[label] = Rounded(d.probability(label));
    }
    labels.push_back({{"category", d.category},
                      {"setting", SettingName(d.setting)},
                      {"total", d.total},
                      {"counts", d.counts},
                      {"probability", probs}});
  }
  Json settings = Json::array();
  for (const auto& s : report.settings) settings.push_back(SettingName(s));
  const Json doc = {{"settings", settings},
                    {"categories", categories},
                    {"aggregates", aggregates},
                    {"label_distributions", labels}};
  out << doc.dump(2) << '\n';
}

void EmitLabelDistributions(const EvaluationReport& report, std::ostream& out) {
  EmitCsv(LabelTable(report), out);
}

}  // namespace sentanalogy
