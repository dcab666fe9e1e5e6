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

// Command-line front end: dataset generation, encoding, solving, reporting.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sentanalogy/annotation.h"
#include "sentanalogy/datagen.h"
#include "sentanalogy/distractors.h"
#include "sentanalogy/embedding_store.h"
#include "sentanalogy/encoders.h"
#include "sentanalogy/error.h"
#include "sentanalogy/evaluator.h"
#include "sentanalogy/log.h"
#include "sentanalogy/pipeline.h"
#include "sentanalogy/solver.h"

namespace sa = sentanalogy;

namespace {

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sa::Error("cannot open '" + path + "' for writing");
  return out;
}

struct GenTemplatesArgs {
  std::string templates;
  std::vector<std::string> pairs;  // category=path
  std::string word_classes;
  std::string out;
};

int RunGenTemplates(const GenTemplatesArgs& args) {
  const auto templates = sa::LoadTemplates(args.templates);
  std::vector<sa::WordPair> pairs;
  for (const auto& spec : args.pairs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw sa::InvalidArgument("--pairs expects CATEGORY=PATH, got '" + spec +
                                "'");
    }
    auto more = sa::LoadWordPairs(spec.substr(eq + 1), spec.substr(0, eq));
    pairs.insert(pairs.end(), more.begin(), more.end());
  }
  sa::WordClassMap classes;
  if (!args.word_classes.empty()) {
    std::ifstream in(args.word_classes);
    if (!in) throw sa::Error("cannot open '" + args.word_classes + "'");
    classes = sa::ReadWordClasses(in, args.word_classes);
  }
  const auto generated = sa::GenerateFromTemplates(templates, pairs, classes);
  auto out = OpenOut(args.out);
  sa::WriteSentencePairs(generated, out);
  std::cerr << generated.size() << " sentence pairs\n";
  return 0;
}

struct GenSyntacticArgs {
  std::string corpus;
  std::string rule;
  std::string lexicon;
  std::string out;
};

int RunGenSyntactic(const GenSyntacticArgs& args) {
  const auto corpus = sa::LoadAnnotatedCorpus(args.corpus);
  const auto lexicon = sa::LoadLexicon(args.lexicon);
  std::vector<sa::SentencePair> generated;
  if (args.rule == sa::category::kComparative) {
    generated = sa::GenerateComparative(corpus, lexicon);
  } else if (args.rule == sa::category::kOpposite) {
    generated = sa::GenerateOpposite(corpus, lexicon);
  } else if (args.rule == sa::category::kPlural) {
    generated = sa::GeneratePlural(corpus, lexicon);
  } else if (args.rule == sa::category::kVerbConjugation) {
    generated = sa::GenerateVerbConjugation(corpus, lexicon);
  } else {
    throw sa::InvalidArgument("unknown rule '" + args.rule + "'");
  }
  auto out = OpenOut(args.out);
  sa::WriteSentencePairs(generated, out);
  std::cerr << generated.size() << " sentence pairs\n";
  return 0;
}

int RunIngestRelations(const std::string& in_path, const std::string& out_path) {
  const auto pairs = sa::IngestRelationPairs(in_path);
  auto out = OpenOut(out_path);
  sa::WriteSentencePairs(pairs, out);
  std::cerr << pairs.size() << " sentence pairs\n";
  return 0;
}

int RunExpand(const std::vector<std::string>& pair_files, bool degenerate,
              const std::string& out_path) {
  std::vector<sa::SentencePair> pairs;
  for (const auto& f : pair_files) {
    auto more = sa::LoadSentencePairs(f);
    pairs.insert(pairs.end(), more.begin(), more.end());
  }
  sa::ExpandOptions options;
  options.allow_degenerate = degenerate;
  const auto questions = sa::ExpandQuestions(pairs, options);
  auto out = OpenOut(out_path);
  sa::WriteQuestions(questions, out);
  std::cerr << questions.size() << " questions\n";
  return 0;
}

struct EncodeArgs {
  std::string input;
  std::string vectors;
  std::string method = "avg";
  int k = 0;
  std::string oov = "error";
  bool report_oov = false;
  std::optional<std::size_t> dim;
  std::string output;
};

int RunEncode(const EncodeArgs& args) {
  const auto words = sa::LoadWordVectors(args.vectors, args.dim);
  const auto sentences = sa::LoadSentencesForEncoding(args.input);
  sa::OovPolicy policy;
  policy.mode = sa::ParseOovMode(args.oov);
  policy.report = args.report_oov;
  sa::DctConfig dct;
  dct.max_coefficient = args.k;
  const auto table = sa::EncodeSentences(
      sentences, words, sa::ParseEncoderMethod(args.method), policy, dct);
  sa::SaveSentenceEmbeddings(table, args.output);
  std::cerr << table.size() << " sentences, dim " << table.dim() << "\n";
  return 0;
}

struct GenDistractorsArgs {
  std::string in;
  std::string questions;
  std::uint64_t seed = 0;
  bool negate_conjuncts = false;
  double deletion_prob = 0.20;
  double mask_prob = 0.20;
  double span_lambda = 3.0;
  std::string out;
  std::string questions_out;
  std::string review_out;
};

int RunGenDistractors(const GenDistractorsArgs& args) {
  const auto pairs = sa::LoadSentencePairs(args.in);
  sa::DistractorConfig config;
  config.seed = args.seed;
  config.negate_conjuncts = args.negate_conjuncts;
  config.deletion_prob = args.deletion_prob;
  config.mask_prob = args.mask_prob;
  config.span_lambda = args.span_lambda;
  std::vector<sa::AnalogyQuestion> questions;
  std::vector<sa::CandidateSet> sets;
  if (!args.questions.empty()) {
    questions = sa::LoadQuestions(args.questions);
    sets = sa::BuildQuestionCandidateSets(questions, pairs, config);
  } else {
    sets = sa::BuildPairCandidateSets(pairs, config);
  }
  {
    auto out = OpenOut(args.out);
    for (const auto& s : sets) out << sa::ToJsonLine(s) << '\n';
  }
  if (!args.questions_out.empty()) {
    if (questions.empty()) {
      throw sa::InvalidArgument("--questions-out requires --questions");
    }
    auto out = OpenOut(args.questions_out);
    sa::WriteQuestions(sa::AttachCandidateSets(questions, sets), out);
  }
  if (!args.review_out.empty()) {
    // Span deletions listed for manual semantic review.
    auto out = OpenOut(args.review_out);
    out << "qid\tpositive\tspan_deletion\n";
    for (const auto& s : sets) {
      for (const auto& d : s.distractors) {
        if (d.kind == sa::DistractorKind::kSpanDeletion) {
          out << s.question_id << '\t' << s.positive << '\t' << d.text << '\n';
        }
      }
    }
  }
  std::cerr << sets.size() << " candidate sets\n";
  return 0;
}

struct SolveArgs {
  std::string questions;
  std::string embeddings;
  std::string metric = "add";
  bool constrained = true;
  double epsilon = 0.001;
  int top_k = 1;
  std::string add_form = "sum";
  unsigned threads = 0;
  std::string out;
};

int RunSolve(const SolveArgs& args) {
  const auto questions = sa::LoadQuestions(args.questions);
  const auto table = sa::LoadSentenceEmbeddings(args.embeddings);
  sa::SolverConfig config;
  config.metric = sa::ParseMetric(args.metric);
  config.constrained = args.constrained;
  config.epsilon = args.epsilon;
  config.top_k = args.top_k;
  if (args.add_form == "offset") {
    config.add_form = sa::AddForm::kOffset;
  } else if (args.add_form != "sum") {
    throw sa::InvalidArgument("unknown --add-form '" + args.add_form + "'");
  }
  sa::SolverStats stats;
  const auto predictions =
      sa::SolveBatch(questions, table, config, args.threads, &stats);
  auto out = OpenOut(args.out);
  sa::WritePredictions(predictions, out);
  if (const auto zeros = stats.zero_norm_similarities.load(); zeros > 0) {
    sa::LogWarning(std::to_string(zeros) +
                   " similarities involved a zero-norm vector and were set "
                   "to 0");
  }
  std::size_t correct = 0;
  for (const auto& p : predictions) correct += p.correct ? 1 : 0;
  std::cerr << sa::MetricName(config.metric) << ' '
            << sa::ProtocolName(config.constrained) << ": " << correct << '/'
            << predictions.size() << '\n';
  return 0;
}

struct ReportArgs {
  std::vector<std::string> preds;
  std::string questions;
  std::string pairs;
  std::string format = "csv";
  std::string out;
  std::string labels_out;
};

int RunReport(const ReportArgs& args) {
  std::vector<sa::Prediction> predictions;
  for (const auto& f : args.preds) {
    auto more = sa::LoadPredictions(f);
    predictions.insert(predictions.end(), more.begin(), more.end());
  }
  const auto questions = sa::LoadQuestions(args.questions);
  std::vector<sa::SentencePair> pairs;
  if (!args.pairs.empty()) pairs = sa::LoadSentencePairs(args.pairs);
  const auto report = sa::BuildReport(predictions, questions, pairs);
  const auto format = sa::ParseReportFormat(args.format);
  if (args.out.empty() || args.out == "-") {
    sa::EmitReport(report, format, std::cout);
  } else {
    auto out = OpenOut(args.out);
    sa::EmitReport(report, format, out);
  }
  if (!args.labels_out.empty()) {
    auto out = OpenOut(args.labels_out);
    sa::EmitLabelDistributions(report, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence analogy dataset generation and evaluation"};
  app.require_subcommand(1);

  GenTemplatesArgs gen_templates;
  auto* cmd_templates =
      app.add_subcommand("gen-templates", "Fill templates with word pairs");
  cmd_templates->add_option("--templates", gen_templates.templates)
      ->required()->check(CLI::ExistingFile);
  cmd_templates->add_option("--pairs", gen_templates.pairs,
                            "CATEGORY=PATH word-pair TSV (repeatable)")
      ->required();
  cmd_templates->add_option("--word-classes", gen_templates.word_classes)
      ->check(CLI::ExistingFile);
  cmd_templates->add_option("--out", gen_templates.out)->required();

  GenSyntacticArgs gen_syntactic;
  auto* cmd_syntactic = app.add_subcommand(
      "gen-syntactic", "Apply a syntactic rule to an annotated corpus");
  cmd_syntactic->add_option("--corpus", gen_syntactic.corpus)
      ->required()->check(CLI::ExistingFile);
  cmd_syntactic->add_option("--rule", gen_syntactic.rule)
      ->required()
      ->check(CLI::IsMember({"comparative", "opposite", "plural",
                             "verb_conjugation"}));
  cmd_syntactic->add_option("--lexicon", gen_syntactic.lexicon)
      ->required()->check(CLI::ExistingFile);
  cmd_syntactic->add_option("--out", gen_syntactic.out)->required();

  std::string relations_in, relations_out;
  auto* cmd_relations = app.add_subcommand(
      "ingest-relations", "Read entailment and negation pairs");
  cmd_relations->add_option("--in", relations_in)
      ->required()->check(CLI::ExistingFile);
  cmd_relations->add_option("--out", relations_out)->required();

  std::vector<std::string> expand_pairs;
  bool expand_degenerate = false;
  std::string expand_out;
  auto* cmd_expand =
      app.add_subcommand("expand", "Expand sentence pairs into questions");
  cmd_expand->add_option("--pairs", expand_pairs)
      ->required()->check(CLI::ExistingFile);
  cmd_expand->add_flag("--allow-degenerate", expand_degenerate);
  cmd_expand->add_option("--out", expand_out)->required();

  EncodeArgs encode;
  auto* cmd_encode =
      app.add_subcommand("encode", "Encode sentences from word vectors");
  cmd_encode->add_option("--input", encode.input)
      ->required()->check(CLI::ExistingFile);
  cmd_encode->add_option("--vectors", encode.vectors)
      ->required()->check(CLI::ExistingFile);
  cmd_encode->add_option("--method", encode.method)
      ->check(CLI::IsMember({"avg", "sqrt-sum", "dct"}));
  cmd_encode->add_option("--k", encode.k, "Highest DCT coefficient")
      ->check(CLI::NonNegativeNumber);
  cmd_encode->add_option("--oov", encode.oov)
      ->check(CLI::IsMember({"error", "skip", "zero"}));
  cmd_encode->add_flag("--report-oov", encode.report_oov);
  cmd_encode->add_option("--dim", encode.dim, "Expected word-vector dimension");
  cmd_encode->add_option("--output", encode.output)->required();

  GenDistractorsArgs distractors;
  auto* cmd_distractors = app.add_subcommand(
      "gen-distractors", "Build candidate sets for relation pairs");
  cmd_distractors->add_option("--in", distractors.in)
      ->required()->check(CLI::ExistingFile);
  cmd_distractors->add_option("--questions", distractors.questions)
      ->check(CLI::ExistingFile);
  cmd_distractors->add_option("--seed", distractors.seed)->required();
  cmd_distractors->add_flag("--negate-conjuncts", distractors.negate_conjuncts);
  cmd_distractors->add_option("--deletion-prob", distractors.deletion_prob);
  cmd_distractors->add_option("--mask-prob", distractors.mask_prob);
  cmd_distractors->add_option("--span-lambda", distractors.span_lambda);
  cmd_distractors->add_option("--out", distractors.out)->required();
  cmd_distractors->add_option("--questions-out", distractors.questions_out,
                              "Questions restricted to their candidate sets");
  cmd_distractors->add_option("--review-out", distractors.review_out,
                              "TSV of span deletions for manual review");

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Answer analogy questions");
  cmd_solve->add_option("--questions", solve.questions)
      ->required()->check(CLI::ExistingFile);
  cmd_solve->add_option("--embeddings", solve.embeddings)
      ->required()->check(CLI::ExistingFile);
  cmd_solve->add_option("--metric", solve.metric)
      ->check(CLI::IsMember({"add", "mul"}));
  cmd_solve->add_option("--constrained", solve.constrained);
  cmd_solve->add_option("--epsilon", solve.epsilon);
  cmd_solve->add_option("--top-k", solve.top_k)->check(CLI::PositiveNumber);
  cmd_solve->add_option("--add-form", solve.add_form)
      ->check(CLI::IsMember({"sum", "offset"}));
  cmd_solve->add_option("--threads", solve.threads, "0 = all cores");
  cmd_solve->add_option("--out", solve.out)->required();

  ReportArgs report;
  auto* cmd_report = app.add_subcommand("report", "Aggregate predictions");
  cmd_report->add_option("--preds", report.preds)
      ->required()->check(CLI::ExistingFile);
  cmd_report->add_option("--questions", report.questions)
      ->required()->check(CLI::ExistingFile);
  cmd_report->add_option("--pairs", report.pairs)->check(CLI::ExistingFile);
  cmd_report->add_option("--format", report.format)
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  cmd_report->add_option("--out", report.out);
  cmd_report->add_option("--labels-out", report.labels_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_templates) return RunGenTemplates(gen_templates);
    if (*cmd_syntactic) return RunGenSyntactic(gen_syntactic);
    if (*cmd_relations) return RunIngestRelations(relations_in, relations_out);
    if (*cmd_expand) return RunExpand(expand_pairs, expand_degenerate, expand_out);
    if (*cmd_encode) return RunEncode(encode);
    if (*cmd_distractors) return RunGenDistractors(distractors);
    if (*cmd_solve) return RunSolve(solve);
    if (*cmd_report) return RunReport(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
