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

#include "sentanalogy/datagen.h"

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "sentanalogy/error.h"

namespace sentanalogy {
namespace {

const std::string kData = SENTANALOGY_TEST_DATA_DIR;
const std::string kAssets = SENTANALOGY_ASSET_DIR;

Template MakeTemplate(std::string cat, std::string text,
                      TemplateSide side = TemplateSide::kBoth) {
  return {std::move(cat), std::move(text), side, {}};
}

Template FamilyTemplate() {
  Template t = MakeTemplate("family", "My {W} went fishing at the lake.");
  t.adaptation_rules = {
      {SlotClass::kDefault, AdaptationRule::Action::kNone, "", ""},
      {SlotClass::kOccupation, AdaptationRule::Action::kReplacePrefix, "My",
       "The"},
      {SlotClass::kPronoun, AdaptationRule::Action::kDropPrefix, "My", ""}};
  return t;
}

TEST(QuestionCountTest, ReproducesPublishedCounts) {
  const std::array<std::pair<std::uint64_t, std::uint64_t>, 12> table = {{
      {138, 9453},   {928, 430128}, {402, 80601},  {150, 11175},
      {126, 7875},   {466, 108345}, {513, 131328}, {205, 20910},
      {512, 130816}, {451, 101475}, {673, 226128}, {511, 130305},
  }};
  for (const auto& [n, count] : table) EXPECT_EQ(QuestionCount(n), count) << n;
  EXPECT_EQ(QuestionCount(0), 0u);
  EXPECT_EQ(QuestionCount(1), 0u);
}

TEST(FillTemplateTest, CapitalExample) {
  Template t = MakeTemplate("common_capital", "She spent most of last summer in {W}.");
  auto pairs = GenerateFromTemplates(
      {t}, {{"Havana", "Cuba", "capital", "country", "common_capital"}});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].s_a, "She spent most of last summer in Havana.");
  EXPECT_EQ(pairs[0].s_b, "She spent most of last summer in Cuba.");
  EXPECT_EQ(pairs[0].label_a, "capital");
  EXPECT_EQ(pairs[0].label_b, "country");
  EXPECT_EQ(pairs[0].slot_a, "Havana");
}

TEST(FillTemplateTest, AdaptationRulesByWordClass) {
  Template t = FamilyTemplate();
  EXPECT_EQ(FillTemplate(t, "uncle", SlotClass::kDefault).sentence,
            "My uncle went fishing at the lake.");
  EXPECT_EQ(FillTemplate(t, "man", SlotClass::kOccupation).sentence,
            "The man went fishing at the lake.");
  FilledTemplate he = FillTemplate(t, "he", SlotClass::kPronoun);
  EXPECT_EQ(he.sentence, "He went fishing at the lake.");
  EXPECT_EQ(he.slot, "He");
}

TEST(FillTemplateTest, UsesWordClassMap) {
  WordClassMap classes = {{"man", SlotClass::kOccupation},
                          {"woman", SlotClass::kOccupation}};
  auto pairs = GenerateFromTemplates(
      {FamilyTemplate()},
      {{"man", "woman", "male", "female", "family"}}, classes);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].s_a, "The man went fishing at the lake.");
  EXPECT_EQ(pairs[0].s_b, "The woman went fishing at the lake.");
}

TEST(FillTemplateTest, RejectsMalformedTemplates) {
  EXPECT_THROW(ValidateTemplate(MakeTemplate("c", "no slot")), InvalidArgument);
  EXPECT_THROW(ValidateTemplate(MakeTemplate("c", "{W} and {W}")),
               InvalidArgument);
  Template t = FamilyTemplate();
  t.text = "Our {W} went home.";
  EXPECT_THROW(FillTemplate(t, "man", SlotClass::kOccupation), InvalidArgument);
}

TEST(GenerateTest, CoordinatedNationalityForms) {
  std::vector<Template> t = {
      MakeTemplate("nationality_adjective", "The man from {W} tapped his cheek.",
                   TemplateSide::kA),
      MakeTemplate("nationality_adjective", "The {W} man tapped his cheek.",
                   TemplateSide::kB)};
  auto pairs = GenerateNationality(
      t, {{"Chile", "Chilean", "country", "adjective", "x"}});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].category, "nationality_adjective");
  EXPECT_EQ(pairs[0].s_a, "The man from Chile tapped his cheek.");
  EXPECT_EQ(pairs[0].s_b, "The Chilean man tapped his cheek.");
  EXPECT_THROW(GenerateNationality({MakeTemplate("nationality_adjective",
                                                 "In {W}.")},
                                   {{"Chile", "Chilean", "", "", ""}}),
               InvalidArgument);
}

TEST(GenerateTest, DropsDuplicatePairsAndRejectsIdentity) {
  Template t = MakeTemplate("c", "Go to {W}.");
  auto pairs = GenerateFromTemplates(
      {t, t}, {{"Rome", "Italy", "", "", "c"}});
  EXPECT_EQ(pairs.size(), 1u);
  EXPECT_THROW(GenerateFromTemplates({t}, {{"Rome", "Rome", "", "", "c"}}),
               InvalidArgument);
}

TEST(ExpandQuestionsTest, MatchesBruteForceEnumeration) {
  std::vector<SentencePair> pairs;
  for (int i = 0; i < 7; ++i) {
    pairs.push_back({.id = "p" + std::to_string(i),
                     .category = i < 4 ? "x" : "y",
                     .s_a = "a" + std::to_string(i),
                     .s_b = "b" + std::to_string(i)});
  }
  auto questions = ExpandQuestions(pairs);
  std::set<std::tuple<std::string, std::string, std::string, std::string>> want;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i < j && pairs[i].category == pairs[j].category) {
        want.insert({pairs[i].s_a, pairs[i].s_b, pairs[j].s_a, pairs[j].s_b});
      }
    }
  }
  std::set<std::tuple<std::string, std::string, std::string, std::string>> got;
  std::set<std::string> qids;
  for (const auto& q : questions) {
    got.insert({q.a, q.b, q.c, q.gold_d});
    qids.insert(q.qid);
  }
  EXPECT_EQ(questions.size(), QuestionCount(4) + QuestionCount(3));
  EXPECT_EQ(got, want);
  EXPECT_EQ(qids.size(), questions.size());
}

TEST(ExpandQuestionsTest, DegenerateQuestionsNeedOptIn) {
  std::vector<SentencePair> pairs = {
      {.id = "p0", .category = "s", .s_a = "Chicago.", .s_b = "Texas."},
      {.id = "p1", .category = "s", .s_a = "Houston.", .s_b = "Texas."}};
  EXPECT_THROW(ExpandQuestions(pairs), InvalidArgument);
  EXPECT_EQ(ExpandQuestions(pairs, {.allow_degenerate = true}).size(), 1u);
}

TEST(QuestionsIoTest, RoundTrip) {
  AnalogyQuestion q{"q1", "x", "A.", "B.", "C.", "D.",
                    CandidateScope::kExplicit, {"D.", "E."}};
  std::stringstream buf;
  WriteQuestions({q, {"q2", "x", "A.", "B.", "E.", "F."}}, buf);
  auto back = ReadQuestions(buf, "mem");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], q);
  EXPECT_EQ(back[1].scope, CandidateScope::kCategoryPool);
}

TEST(SentencePairsIoTest, RoundTrip) {
  SentencePair p{.id = "c:0", .category = "c", .s_a = "A \"q\".",
                 .s_b = "B.", .slot_a = "A", .slot_b = "B",
                 .label_a = "la", .label_b = "lb"};
  std::stringstream buf;
  WriteSentencePairs({p}, buf);
  auto back = ReadSentencePairs(buf, "mem");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], p);
}

TEST(WordPairsTest, ParsesAndRejectsBadRows) {
  std::istringstream in(": section\nAthens\tGreece\tcapital\tcountry\n");
  auto pairs = ReadWordPairs(in, "mem", "common_capital");
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].w_b, "Greece");
  std::istringstream bad("Athens\tGreece\n");
  EXPECT_THROW(ReadWordPairs(bad, "mem", "c"), ParseError);
}

TEST(RelationPairsTest, IngestsFixture) {
  auto pairs = IngestRelationPairs(kData + "/relations.jsonl");
  ASSERT_EQ(pairs.size(), 100u);
  std::size_t entail = 0;
  for (const auto& p : pairs) {
    ASSERT_TRUE(p.annotation_b.has_value());
    EXPECT_EQ(p.annotation_b->Text(), p.s_b);
    if (p.category == "entailment") ++entail;
  }
  EXPECT_EQ(entail, 60u);
  EXPECT_EQ(ExpandQuestions(pairs).size(),
            QuestionCount(60) + QuestionCount(40));
  std::istringstream bad(
      R"({"premise": "a", "hypothesis": "b", "relation": "contradiction"})");
  EXPECT_THROW(ReadRelationPairs(bad, "mem"), ParseError);
}

TEST(ThirdPersonSingularTest, SpellingRules) {
  EXPECT_EQ(ThirdPersonSingular("play"), "plays");
  EXPECT_EQ(ThirdPersonSingular("watch"), "watches");
  EXPECT_EQ(ThirdPersonSingular("fly"), "flies");
  EXPECT_EQ(ThirdPersonSingular("go"), "goes");
  EXPECT_EQ(ThirdPersonSingular("have"), "has");
}

TEST(CorpusRulesTest, MatchHandWrittenOracle) {
  auto corpus = LoadAnnotatedCorpus(kData + "/syntactic_sample.jsonl");
  const std::string lex = kAssets + "/lexicons/";
  std::vector<std::tuple<std::string, std::string, std::string>> got;
  auto collect = [&](const std::vector<SentencePair>& pairs) {
    for (const auto& p : pairs) got.emplace_back(p.category, p.s_a, p.s_b);
  };
  collect(GenerateComparative(corpus, LoadLexicon(lex + "comparative_base.tsv")));
  collect(GenerateOpposite(corpus, LoadLexicon(lex + "antonyms.tsv")));
  collect(GeneratePlural(corpus, LoadLexicon(lex + "plural_singular.tsv")));
  collect(GenerateVerbConjugation(corpus,
                                  LoadLexicon(lex + "third_singular.tsv")));

  std::vector<std::tuple<std::string, std::string, std::string>> want;
  std::ifstream in(kData + "/syntactic_oracle.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    want.emplace_back(line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
                      line.substr(t2 + 1));
  }
  ASSERT_EQ(want.size(), 36u);
  EXPECT_EQ(got, want);
}

TEST(BundledAssetsTest, GenerateExpectedPairCounts) {
  auto templates = LoadTemplates(kAssets + "/templates.json");
  std::ifstream classes_in(kAssets + "/word_classes.tsv");
  WordClassMap classes = ReadWordClasses(classes_in, "word_classes.tsv");
  const std::array<std::pair<const char*, std::size_t>, 5> expected = {{
      {"common_capital", 138},
      {"all_capital", 928},
      {"currency", 150},
      {"city_in_state", 408},
      {"family", 132},
  }};
  for (const auto& [cat, count] : expected) {
    auto pairs = GenerateFromTemplates(
        templates, LoadWordPairs(kAssets + "/pairs/" + cat + ".tsv", cat),
        classes);
    EXPECT_EQ(pairs.size(), count) << cat;
  }
  auto nat = GenerateNationality(
      templates, LoadWordPairs(kAssets + "/pairs/nationality_adjective.tsv",
                               "nationality_adjective"));
  EXPECT_EQ(nat.size(), 205u);
}

}  // namespace
}  // namespace sentanalogy
