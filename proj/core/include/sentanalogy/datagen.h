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

#ifndef SENTANALOGY_DATAGEN_H_
#define SENTANALOGY_DATAGEN_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentanalogy/annotation.h"

namespace sentanalogy {

// Category names used by the bundled assets and the CLI.
namespace category {
inline constexpr std::string_view kCommonCapital = "common_capital";
inline constexpr std::string_view kAllCapital = "all_capital";
inline constexpr std::string_view kCityInState = "city_in_state";
inline constexpr std::string_view kCurrency = "currency";
inline constexpr std::string_view kFamily = "family";
inline constexpr std::string_view kComparative = "comparative";
inline constexpr std::string_view kOpposite = "opposite";
inline constexpr std::string_view kNationalityAdjective =
    "nationality_adjective";
inline constexpr std::string_view kPlural = "plural";
inline constexpr std::string_view kVerbConjugation = "verb_conjugation";
inline constexpr std::string_view kEntailment = "entailment";
inline constexpr std::string_view kNegation = "negation";
}  // namespace category

enum class TemplateSide { kA, kB, kBoth };

// Semantic class of a slot word, selecting the template adaptation rule.
enum class SlotClass { kDefault, kOccupation, kPronoun };

struct AdaptationRule {
  enum class Action { kNone, kReplacePrefix, kDropPrefix };

  SlotClass condition = SlotClass::kDefault;
  Action action = Action::kNone;
  // kReplacePrefix: the word before the slot must equal `old_word` and is
  // replaced by `new_word`. kDropPrefix: the word before the slot must equal
  // `old_word` and is removed.
  std::string old_word;
  std::string new_word;
};

// A sentence with exactly one `{W}` slot.
//
// Within a category every kBoth template yields the combination (T, T); the
// kA and kB templates are coordinated by position, the k-th A template
// pairing with the k-th B template.
struct Template {
  std::string category;
  std::string text;
  TemplateSide side = TemplateSide::kBoth;
  std::vector<AdaptationRule> adaptation_rules;
};

struct WordPair {
  std::string w_a;
  std::string w_b;
  std::string label_a;
  std::string label_b;
  std::string category;
};

// One (S_A, S_B) instance. Sentence texts double as item ids in embedding
// tables and questions.
struct SentencePair {
  std::string id;
  std::string category;
  std::string s_a;
  std::string s_b;
  std::string slot_a;
  std::string slot_b;
  std::string label_a;
  std::string label_b;
  // Parsed S_B, carried for relation pairs so distractors can be built.
  std::optional<AnnotatedSentence> annotation_b;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

enum class CandidateScope { kCategoryPool, kExplicit };

// A:B :: C:D. Items are sentence ids (texts).
struct AnalogyQuestion {
  std::string qid;
  std::string category;
  std::string a;
  std::string b;
  std::string c;
  std::string gold_d;
  CandidateScope scope = CandidateScope::kCategoryPool;
  // Only for kExplicit.
  std::vector<std::string> candidates;

  // Items removed from the candidates under the constrained protocol.
  std::array<const std::string*, 3> exclusions() const { return {&a, &b, &c}; }

  friend bool operator==(const AnalogyQuestion&,
                         const AnalogyQuestion&) = default;
};

using WordClassMap = std::unordered_map<std::string, SlotClass>;
using Lexicon = std::unordered_map<std::string, std::string>;

SlotClass ParseSlotClass(std::string_view name);
TemplateSide ParseTemplateSide(std::string_view name);

// Checks the single-placeholder rule and that a non-empty rule list covers
// the default class. Throws InvalidArgument.
void ValidateTemplate(const Template& t);

// Substitutes `word` into the template, applying the adaptation rule chosen
// by `word_class`. Returns the sentence and the slot word as it appears in
// it (capitalized when it moved to the sentence start).
struct FilledTemplate {
  std::string sentence;
  std::string slot;
};
FilledTemplate FillTemplate(const Template& t, std::string_view word,
                            SlotClass word_class);

// Template-driven generation for the semantic categories and nationality
// adjectives. Output order: category (first appearance in `pairs`), template
// combination, pair index. Exact duplicate (S_A, S_B) pairs are dropped and
// logged.
std::vector<SentencePair> GenerateFromTemplates(
    const std::vector<Template>& templates, const std::vector<WordPair>& pairs,
    const WordClassMap& word_classes = {});

// Same as GenerateFromTemplates, restricted to the nationality-adjective
// category: requires coordinated A (country phrase) and B (adjective)
// templates.
std::vector<SentencePair> GenerateNationality(
    const std::vector<Template>& templates, const std::vector<WordPair>& pairs);

// Corpus rules for the syntactic categories. Sentences that do not match
// are skipped; sentences that match but lack a lexicon entry are skipped and
// logged. Each sentence yields at most one pair.

// Comparative adjective (JJR) followed by "than": S_A keeps the material
// before the comparative, uses the base form and restores the terminal
// punctuation; S_B is the original.
std::vector<SentencePair> GenerateComparative(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& base_forms);

// First adjective with a known antonym: S_A is the original, S_B the
// antonym-swapped sentence.
std::vector<SentencePair> GenerateOpposite(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& antonyms);

// Plural noun (NNS) with a numeral attached to it: S_A uses the singular
// noun with the numeral replaced by "one" (digits and number words) or
// "a"/"an" (other numerals); S_B is the original.
std::vector<SentencePair> GeneratePlural(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& singular_forms);

// Auxiliary immediately followed by a base-form verb (VB) with a
// third-person singular subject: S_A is the original, S_B drops the
// auxiliary and inflects the verb.
std::vector<SentencePair> GenerateVerbConjugation(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& inflections);

// Regular English third-person singular present form (plays, watches, tries).
std::string ThirdPersonSingular(std::string_view verb);

struct ExpandOptions {
  // Keep questions whose gold sentence equals A, B or C (e.g. city-in-state
  // pairs sharing a state). Such questions can never be answered under the
  // constrained protocol.
  bool allow_degenerate = false;
};

// All unordered pairs of distinct sentence pairs within each category, the
// lower index supplying A:B, so a category of n pairs yields n (n - 1) / 2
// questions. Throws InvalidArgument for a degenerate question unless
// `options.allow_degenerate` is set.
std::vector<AnalogyQuestion> ExpandQuestions(
    const std::vector<SentencePair>& pairs, const ExpandOptions& options = {});

// n (n - 1) / 2.
std::uint64_t QuestionCount(std::uint64_t sentence_pairs);

// Relation pairs from NLI-style JSONL rows
// {"premise", "hypothesis", "relation", "hypothesis_tokens"?}.
std::vector<SentencePair> ReadRelationPairs(std::istream& in,
                                            std::string_view source);
std::vector<SentencePair> IngestRelationPairs(
    const std::filesystem::path& path);

// --- Interchange formats ---------------------------------------------------

std::vector<Template> ReadTemplates(std::istream& in, std::string_view source);
std::vector<Template> LoadTemplates(const std::filesystem::path& path);

// `w_a TAB w_b TAB label_a TAB label_b`; blank lines and lines starting with
// '#' or ':' are skipped.
std::vector<WordPair> ReadWordPairs(std::istream& in, std::string_view source,
                                    std::string_view category);
std::vector<WordPair> LoadWordPairs(const std::filesystem::path& path,
                                    std::string_view category);

// `word TAB class` lines.
WordClassMap ReadWordClasses(std::istream& in, std::string_view source);
// `key TAB value` lines, keys lowercased.
Lexicon ReadLexicon(std::istream& in, std::string_view source);
Lexicon LoadLexicon(const std::filesystem::path& path);

std::string ToJsonLine(const SentencePair& pair);
std::vector<SentencePair> ReadSentencePairs(std::istream& in,
                                            std::string_view source);
std::vector<SentencePair> LoadSentencePairs(const std::filesystem::path& path);
void WriteSentencePairs(const std::vector<SentencePair>& pairs,
                        std::ostream& out);

std::string ToJsonLine(const AnalogyQuestion& question);
std::vector<AnalogyQuestion> ReadQuestions(std::istream& in,
                                           std::string_view source);
std::vector<AnalogyQuestion> LoadQuestions(const std::filesystem::path& path);
void WriteQuestions(const std::vector<AnalogyQuestion>& questions,
                    std::ostream& out);

}  // namespace sentanalogy

#endif  // SENTANALOGY_DATAGEN_H_
