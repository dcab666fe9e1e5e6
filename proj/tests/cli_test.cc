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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sentanalogy/datagen.h"
#include "sentanalogy/pipeline.h"
#include "sentanalogy/solver.h"

namespace sentanalogy {
namespace {

namespace fs = std::filesystem;

const std::string kCli = SENTANALOGY_CLI_PATH;
const std::string kData = SENTANALOGY_TEST_DATA_DIR;
const std::string kAssets = SENTANALOGY_ASSET_DIR;

int RunCli(const std::string& args) {
  const std::string cmd = "\"" + kCli + "\" " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::size_t CountLines(const fs::path& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++n;
  }
  return n;
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sentanalogy_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  // Writes random vectors for every token of the sentences in `input`.
  void WriteVectors(const std::string& input, const std::string& out) {
    std::set<std::string> vocab;
    for (const auto& s : LoadSentencesForEncoding(input)) {
      vocab.insert(s.tokens.begin(), s.tokens.end());
    }
    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal;
    std::ofstream f(out);
    for (const auto& w : vocab) {
      f << w;
      for (int j = 0; j < 8; ++j) f << ' ' << normal(rng);
      f << '\n';
    }
  }

  fs::path dir_;
};

TEST_F(CliTest, TemplatesToReport) {
  ASSERT_EQ(RunCli("gen-templates --templates " + kAssets + "/templates.json" +
                " --pairs common_capital=" + kAssets +
                "/pairs/common_capital.tsv --out " + P("pairs.jsonl")),
            0);
  EXPECT_EQ(CountLines(P("pairs.jsonl")), 138u);
  ASSERT_EQ(RunCli("expand --pairs " + P("pairs.jsonl") + " --out " +
                P("questions.jsonl")),
            0);
  EXPECT_EQ(CountLines(P("questions.jsonl")), 9453u);

  WriteVectors(P("pairs.jsonl"), P("vectors.txt"));
  ASSERT_EQ(RunCli("encode --input " + P("pairs.jsonl") + " --vectors " +
                P("vectors.txt") + " --method dct --k 1 --output " +
                P("emb.txt")),
            0);
  ASSERT_EQ(RunCli("solve --questions " + P("questions.jsonl") +
                " --embeddings " + P("emb.txt") +
                " --metric mul --constrained false --threads 2 --out " +
                P("preds.jsonl")),
            0);
  EXPECT_EQ(CountLines(P("preds.jsonl")), 9453u);
  ASSERT_EQ(RunCli("report --preds " + P("preds.jsonl") + " --questions " +
                P("questions.jsonl") + " --pairs " + P("pairs.jsonl") +
                " --format csv --out " + P("report.csv") + " --labels-out " +
                P("labels.csv")),
            0);
  const std::string report = ReadAll(P("report.csv"));
  EXPECT_EQ(report.rfind("category,n_questions,3CosMul-U\n", 0), 0u);
  EXPECT_NE(report.find("common_capital,9453,"), std::string::npos);
  EXPECT_EQ(ReadAll(P("labels.csv"))
                .rfind("category,metric,protocol,label,count,probability\n", 0),
            0u);
}

TEST_F(CliTest, ReportRejectsUnmatchedPrediction) {
  {
    std::ofstream q(P("q.jsonl"));
    q << ToJsonLine(AnalogyQuestion{"q1", "c", "A.", "B.", "C.", "D."}) << '\n';
    std::ofstream p(P("p.jsonl"));
    p << ToJsonLine(Prediction{.qid = "zz", .predicted = "D."}) << '\n';
  }
  EXPECT_NE(RunCli("report --preds " + P("p.jsonl") + " --questions " +
                P("q.jsonl") + " --format csv --out " + P("r.csv")),
            0);
}

TEST_F(CliTest, RelationsWithDistractors) {
  ASSERT_EQ(RunCli("ingest-relations --in " + kData + "/relations.jsonl --out " +
                P("rel.jsonl")),
            0);
  ASSERT_EQ(RunCli("expand --pairs " + P("rel.jsonl") + " --out " + P("rq.jsonl")),
            0);
  ASSERT_EQ(RunCli("gen-distractors --in " + P("rel.jsonl") + " --questions " +
                P("rq.jsonl") + " --seed 7 --out " + P("sets.jsonl") +
                " --questions-out " + P("rqx.jsonl")),
            0);
  EXPECT_EQ(CountLines(P("sets.jsonl")), CountLines(P("rq.jsonl")));
  const std::string first = ReadAll(P("sets.jsonl"));
  ASSERT_EQ(RunCli("gen-distractors --in " + P("rel.jsonl") + " --questions " +
                P("rq.jsonl") + " --seed 7 --out " + P("sets2.jsonl")),
            0);
  EXPECT_EQ(first, ReadAll(P("sets2.jsonl")));
  auto questions = LoadQuestions(P("rqx.jsonl"));
  ASSERT_FALSE(questions.empty());
  EXPECT_EQ(questions[0].scope, CandidateScope::kExplicit);
}

TEST_F(CliTest, UnknownRuleIsAnError) {
  EXPECT_NE(RunCli("gen-syntactic --corpus " + kData +
                "/syntactic_sample.jsonl --rule superlative --lexicon x --out " +
                P("o.jsonl")),
            0);
}

}  // namespace
}  // namespace sentanalogy
