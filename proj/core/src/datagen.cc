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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>
#include <utility>

#include "jsonl.h"
#include "sentanalogy/error.h"
#include "sentanalogy/log.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

using internal::Json;

namespace {

constexpr std::string_view kPlaceholder = "{W}";

std::string PairId(std::string_view category, std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 5) digits.insert(0, 5 - digits.size(), '0');
  return std::string(category) + "-" + digits;
}

bool StartsUpper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

// Copies the capitalization of the first letter of `model` onto `word`.
std::string MatchCase(std::string_view model, std::string_view word) {
  if (StartsUpper(model)) return CapitalizeFirst(word);
  return std::string(word);
}

// Collects pairs in order, dropping exact (S_A, S_B) repeats, and assigns
// ids per category.
class PairCollector {
 public:
  explicit PairCollector(bool dedupe = true) : dedupe_(dedupe) {}

  void Add(SentencePair pair) {
    if (pair.s_a == pair.s_b) {
      throw InvalidArgument("generated identical sentences for pair (" +
                            pair.slot_a + ", " + pair.slot_b + "): '" +
                            pair.s_a + "'");
    }
    if (dedupe_ && !seen_.insert({pair.category, pair.s_a, pair.s_b}).second) {
      LogInfo("duplicate sentence pair dropped: '" + pair.s_a + "' / '" +
              pair.s_b + "'");
      return;
    }
    pair.id = PairId(pair.category, next_index_[pair.category]++);
    pairs_.push_back(std::move(pair));
  }

  std::vector<SentencePair> Take() { return std::move(pairs_); }

 private:
  bool dedupe_;
  std::vector<SentencePair> pairs_;
  std::set<std::tuple<std::string, std::string, std::string>> seen_;
  std::unordered_map<std::string, std::size_t> next_index_;
};

std::vector<std::string> Words(const AnnotatedSentence& s) { return s.Words(); }

bool HasTerminalPunct(const AnnotatedSentence& s) {
  return !s.tokens.empty() && IsPunctuationToken(s.tokens.back().text);
}

std::optional<std::string> LookupForm(const Lexicon& lexicon,
                                      const Token& token) {
  const std::string lower = ToLower(token.text);
  if (auto it = lexicon.find(lower); it != lexicon.end()) return it->second;
  const std::string lemma = ToLower(token.lemma);
  if (!lemma.empty() && lemma != lower) return lemma;
  return std::nullopt;
}

const std::unordered_set<std::string>& NumberWords() {
  static const std::unordered_set<std::string> words = {
      "two",      "three",    "four",     "five",      "six",
      "seven",    "eight",    "nine",     "ten",       "eleven",
      "twelve",   "thirteen", "fourteen", "fifteen",   "sixteen",
      "seventeen", "eighteen", "nineteen", "twenty",   "thirty",
      "forty",    "fifty",    "sixty",    "seventy",   "eighty",
      "ninety",   "hundred",  "thousand", "million",   "billion"};
  return words;
}

bool IsDigitNumeral(std::string_view s) {
  bool any_digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      any_digit = true;
    } else if (c != ',' && c != '.') {
      return false;
    }
  }
  return any_digit;
}

bool IsNumberWord(std::string_view s) {
  const std::string lower = ToLower(s);
  if (NumberWords().count(lower)) return true;
  // twenty-five, forty-two, ...
  const auto dash = lower.find('-');
  return dash != std::string::npos && NumberWords().count(lower.substr(0, dash));
}

bool StartsWithVowelSound(std::string_view word) {
  if (word.empty()) return false;
  const char c =
      static_cast<char>(std::tolower(static_cast<unsigned char>(word.front())));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsNumeral(const Token& t) { return t.pos == "NUM" || t.tag == "CD"; }

bool IsAuxiliary(const Token& t) { return t.pos == "AUX" || t.tag == "MD"; }

bool IsSubjectLabel(std::string_view dep) {
  return dep == "nsubj" || dep == "nsubjpass";
}

// Returns true when the subject attached to `verb` or `aux` is known to be
// third-person singular, false when it is plural or first/second person,
// and nullopt when no subject is attached.
std::optional<bool> SubjectIsThirdSingular(const AnnotatedSentence& s,
                                           std::size_t aux,
                                           std::size_t verb) {
  static const std::unordered_set<std::string> kNonThird = {"i", "you", "we",
                                                            "they"};
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    if (!IsSubjectLabel(t.dep) || (t.head != verb && t.head != aux)) continue;
    if (t.tag == "NNS" || t.tag == "NNPS") return false;
    if (kNonThird.count(ToLower(t.text))) return false;
    return true;
  }
  return std::nullopt;
}

}  // namespace

SlotClass ParseSlotClass(std::string_view name) {
  if (name == "default") return SlotClass::kDefault;
  if (name == "occupation") return SlotClass::kOccupation;
  if (name == "pronoun") return SlotClass::kPronoun;
  throw InvalidArgument("unknown slot-word class '" + std::string(name) + "'");
}

TemplateSide ParseTemplateSide(std::string_view name) {
  if (name == "A" || name == "a") return TemplateSide::kA;
  if (name == "B" || name == "b") return TemplateSide::kB;
  if (name == "both") return TemplateSide::kBoth;
  throw InvalidArgument("unknown template side '" + std::string(name) + "'");
}

void ValidateTemplate(const Template& t) {
  const auto first = t.text.find(kPlaceholder);
  if (first == std::string::npos) {
    throw InvalidArgument("template without {W} placeholder: '" + t.text + "'");
  }
  if (t.text.find(kPlaceholder, first + 1) != std::string::npos) {
    throw InvalidArgument("template with more than one {W}: '" + t.text + "'");
  }
  if (!t.adaptation_rules.empty() &&
      std::none_of(t.adaptation_rules.begin(), t.adaptation_rules.end(),
                   [](const AdaptationRule& r) {
                     return r.condition == SlotClass::kDefault;
                   })) {
    throw InvalidArgument("adaptation rules do not cover the default class: '" +
                          t.text + "'");
  }
}

FilledTemplate FillTemplate(const Template& t, std::string_view word,
                            SlotClass word_class) {
  ValidateTemplate(t);
  const std::size_t slot = t.text.find(kPlaceholder);
  std::string before = t.text.substr(0, slot);
  const std::string after = t.text.substr(slot + kPlaceholder.size());
  std::string filled(word);

  const AdaptationRule* rule = nullptr;
  for (const auto& r : t.adaptation_rules) {
    if (r.condition == word_class) {
      rule = &r;
      break;
    }
  }
  if (rule == nullptr) {
    for (const auto& r : t.adaptation_rules) {
      if (r.condition == SlotClass::kDefault) rule = &r;
    }
  }

  if (rule != nullptr && rule->action != AdaptationRule::Action::kNone) {
    // The prefix is the whitespace-delimited word right before the slot.
    if (before.empty() || before.back() != ' ') {
      throw InvalidArgument("adaptation rule needs a word before {W}: '" +
                            t.text + "'");
    }
    const std::size_t end = before.size() - 1;
    const std::size_t start = before.rfind(' ', end - 1);
    const std::size_t word_start = start == std::string::npos ? 0 : start + 1;
    const std::string prefix = before.substr(word_start, end - word_start);
    if (ToLower(prefix) != ToLower(rule->old_word)) {
      throw InvalidArgument("adaptation rule expects '" + rule->old_word +
                            "' before {W} in '" + t.text + "'");
    }
    if (rule->action == AdaptationRule::Action::kReplacePrefix) {
      before = before.substr(0, word_start) +
               MatchCase(prefix, rule->new_word) + " ";
    } else {
      before = before.substr(0, word_start);
      if (word_start == 0) filled = CapitalizeFirst(filled);
    }
  }
  return {before + filled + after, filled};
}

std::vector<SentencePair> GenerateFromTemplates(
    const std::vector<Template>& templates, const std::vector<WordPair>& pairs,
    const WordClassMap& word_classes) {
  std::vector<std::string> categories;
  for (const auto& p : pairs) {
    if (p.w_a == p.w_b) {
      throw InvalidArgument("word pair with identical words '" + p.w_a + "'");
    }
    if (std::find(categories.begin(), categories.end(), p.category) ==
        categories.end()) {
      categories.push_back(p.category);
    }
  }
  auto class_of = [&](const std::string& w) {
    auto it = word_classes.find(ToLower(w));
    return it == word_classes.end() ? SlotClass::kDefault : it->second;
  };

  PairCollector out;
  for (const auto& cat : categories) {
    std::vector<std::pair<const Template*, const Template*>> combos;
    std::vector<const Template*> side_a, side_b;
    for (const auto& t : templates) {
      if (t.category != cat) continue;
      ValidateTemplate(t);
      switch (t.side) {
        case TemplateSide::kBoth:
          combos.emplace_back(&t, &t);
          break;
        case TemplateSide::kA:
          side_a.push_back(&t);
          break;
        case TemplateSide::kB:
          side_b.push_back(&t);
          break;
      }
    }
    if (side_a.size() != side_b.size()) {
      throw InvalidArgument("category '" + cat + "' has " +
                            std::to_string(side_a.size()) + " A-side and " +
                            std::to_string(side_b.size()) +
                            " B-side templates; they must pair up");
    }
    for (std::size_t k = 0; k < side_a.size(); ++k) {
      combos.emplace_back(side_a[k], side_b[k]);
    }
    if (combos.empty()) {
      throw InvalidArgument("no template for category '" + cat + "'");
    }
    for (const auto& [ta, tb] : combos) {
      for (const auto& p : pairs) {
        if (p.category != cat) continue;
        auto fa = FillTemplate(*ta, p.w_a, class_of(p.w_a));
        auto fb = FillTemplate(*tb, p.w_b, class_of(p.w_b));
        out.Add({.id = {},
                 .category = cat,
                 .s_a = std::move(fa.sentence),
                 .s_b = std::move(fb.sentence),
                 .slot_a = std::move(fa.slot),
                 .slot_b = std::move(fb.slot),
                 .label_a = p.label_a,
                 .label_b = p.label_b,
                 .annotation_b = std::nullopt});
      }
    }
  }
  return out.Take();
}

std::vector<SentencePair> GenerateNationality(
    const std::vector<Template>& templates,
    const std::vector<WordPair>& pairs) {
  std::vector<Template> selected;
  for (const auto& t : templates) {
    if (t.category == category::kNationalityAdjective) selected.push_back(t);
  }
  std::vector<WordPair> nat_pairs;
  for (auto p : pairs) {
    p.category = std::string(category::kNationalityAdjective);
    nat_pairs.push_back(std::move(p));
  }
  const bool coordinated =
      std::any_of(selected.begin(), selected.end(),
                  [](const Template& t) { return t.side == TemplateSide::kA; });
  if (!coordinated) {
    throw InvalidArgument(
        "nationality templates must come as coordinated A/B forms");
  }
  return GenerateFromTemplates(selected, nat_pairs);
}

std::vector<SentencePair> GenerateComparative(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& base_forms) {
  PairCollector out;
  for (const auto& s : corpus) {
    const auto& toks = s.tokens;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      if (toks[i].tag != "JJR" || ToLower(toks[i + 1].text) != "than") {
        continue;
      }
      auto base = LookupForm(base_forms, toks[i]);
      if (!base) {
        LogInfo("comparative skipped, no base form for '" + toks[i].text +
                "': " + s.Text());
        break;
      }
      std::vector<std::string> words;
      for (std::size_t k = 0; k < i; ++k) words.push_back(toks[k].text);
      const std::string base_word = MatchCase(toks[i].text, *base);
      words.push_back(base_word);
      if (HasTerminalPunct(s)) words.push_back(toks.back().text);
      out.Add({.id = {},
               .category = std::string(category::kComparative),
               .s_a = Detokenize(words),
               .s_b = s.Text(),
               .slot_a = base_word,
               .slot_b = toks[i].text,
               .label_a = "base",
               .label_b = "comparative",
               .annotation_b = std::nullopt});
      break;
    }
  }
  return out.Take();
}

std::vector<SentencePair> GenerateOpposite(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& antonyms) {
  PairCollector out;
  for (const auto& s : corpus) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (t.pos != "ADJ") continue;
      auto it = antonyms.find(ToLower(t.text));
      if (it == antonyms.end()) continue;
      auto words = Words(s);
      const std::string swapped = MatchCase(t.text, it->second);
      words[i] = swapped;
      out.Add({.id = {},
               .category = std::string(category::kOpposite),
               .s_a = s.Text(),
               .s_b = Detokenize(words),
               .slot_a = t.text,
               .slot_b = swapped,
               .label_a = "adjective",
               .label_b = "opposite",
               .annotation_b = std::nullopt});
      break;
    }
  }
  return out.Take();
}

std::vector<SentencePair> GeneratePlural(
    const std::vector<AnnotatedSentence>& corpus,
    const Lexicon& singular_forms) {
  PairCollector out;
  for (const auto& s : corpus) {
    const auto& toks = s.tokens;
    bool done = false;
    for (std::size_t i = 1; i < toks.size() && !done; ++i) {
      if (toks[i].tag != "NNS") continue;
      for (std::size_t j = i; j-- > 0;) {
        const Token& num = toks[j];
        if (!IsNumeral(num) || (num.head != i && j + 1 != i)) continue;
        const std::string lower = ToLower(num.text);
        if (lower == "one" || lower == "1") continue;
        auto singular = LookupForm(singular_forms, toks[i]);
        if (!singular) {
          LogInfo("plural skipped, no singular form for '" + toks[i].text +
                  "': " + s.Text());
          done = true;
          break;
        }
        auto words = Words(s);
        std::string replacement;
        if (IsDigitNumeral(num.text) || IsNumberWord(num.text)) {
          replacement = "one";
        } else {
          const std::string& next = j + 1 == i ? *singular : words[j + 1];
          replacement = StartsWithVowelSound(next) ? "an" : "a";
        }
        words[j] = MatchCase(num.text, replacement);
        const std::string singular_word = MatchCase(toks[i].text, *singular);
        words[i] = singular_word;
        out.Add({.id = {},
                 .category = std::string(category::kPlural),
                 .s_a = Detokenize(words),
                 .s_b = s.Text(),
                 .slot_a = singular_word,
                 .slot_b = toks[i].text,
                 .label_a = "singular",
                 .label_b = "plural",
                 .annotation_b = std::nullopt});
        done = true;
        break;
      }
    }
  }
  return out.Take();
}

std::string ThirdPersonSingular(std::string_view verb) {
  const std::string v = ToLower(verb);
  if (v == "be") return "is";
  if (v == "have") return "has";
  if (v == "do") return "does";
  if (v == "go") return "goes";
  auto ends_with = [&](std::string_view suffix) {
    return v.size() >= suffix.size() &&
           v.compare(v.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") ||
      ends_with("sh")) {
    return v + "es";
  }
  if (v.size() >= 2 && v.back() == 'y' &&
      !StartsWithVowelSound(std::string_view(v).substr(v.size() - 2, 1))) {
    return v.substr(0, v.size() - 1) + "ies";
  }
  return v + "s";
}

std::vector<SentencePair> GenerateVerbConjugation(
    const std::vector<AnnotatedSentence>& corpus, const Lexicon& inflections) {
  PairCollector out;
  for (const auto& s : corpus) {
    const auto& toks = s.tokens;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      const Token& aux = toks[i];
      const Token& verb = toks[i + 1];
      if (!IsAuxiliary(aux) || verb.tag != "VB" ||
          (verb.pos != "VERB" && verb.pos != "AUX")) {
        continue;
      }
      auto third = SubjectIsThirdSingular(s, i, i + 1);
      if (!third.has_value()) {
        LogInfo("verb conjugation skipped, no subject: " + s.Text());
        break;
      }
      if (!*third) break;
      const std::string lower = ToLower(verb.text);
      auto it = inflections.find(lower);
      std::string inflected =
          it != inflections.end() ? it->second : ThirdPersonSingular(lower);
      inflected = MatchCase(i == 0 ? aux.text : verb.text, inflected);

      std::vector<std::string> words;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        if (k == i) continue;
        words.push_back(k == i + 1 ? inflected : toks[k].text);
      }
      out.Add({.id = {},
               .category = std::string(category::kVerbConjugation),
               .s_a = s.Text(),
               .s_b = Detokenize(words),
               .slot_a = verb.text,
               .slot_b = inflected,
               .label_a = "base",
               .label_b = "third_singular",
               .annotation_b = std::nullopt});
      break;
    }
  }
  return out.Take();
}

std::uint64_t QuestionCount(std::uint64_t sentence_pairs) {
  return sentence_pairs < 2 ? 0 : sentence_pairs * (sentence_pairs - 1) / 2;
}

std::vector<AnalogyQuestion> ExpandQuestions(
    const std::vector<SentencePair>& pairs, const ExpandOptions& options) {
  std::vector<std::string> categories;
  std::unordered_map<std::string, std::vector<const SentencePair*>> by_cat;
  for (const auto& p : pairs) {
    auto [it, inserted] = by_cat.try_emplace(p.category);
    if (inserted) categories.push_back(p.category);
    it->second.push_back(&p);
  }
  std::uint64_t total = 0;
  for (const auto& cat : categories) total += QuestionCount(by_cat[cat].size());

  std::vector<AnalogyQuestion> questions;
  questions.reserve(total);
  for (const auto& cat : categories) {
    const auto& members = by_cat[cat];
    const std::string prefix = cat + ":";
    for (std::size_t i = 0; i < members.size(); ++i) {
      const SentencePair& ab = *members[i];
      const std::string qid_i = prefix + std::to_string(i) + "-";
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const SentencePair& cd = *members[j];
        if (!options.allow_degenerate &&
            (cd.s_b == ab.s_a || cd.s_b == ab.s_b || cd.s_b == cd.s_a)) {
          throw InvalidArgument("degenerate question: the target of pair " +
                                cd.id + " repeats a cue sentence of " + ab.id +
                                " (pass allow_degenerate to keep it)");
        }
        AnalogyQuestion& q = questions.emplace_back();
        q.qid = qid_i + std::to_string(j);
        q.category = cat;
        q.a = ab.s_a;
        q.b = ab.s_b;
        q.c = cd.s_a;
        q.gold_d = cd.s_b;
      }
    }
  }
  return questions;
}

std::vector<SentencePair> ReadRelationPairs(std::istream& in,
                                            std::string_view source) {
  // Every row becomes a pair; repeated rows are kept.
  PairCollector out(/*dedupe=*/false);
  internal::ForEachJsonLine(in, source, [&](const Json& row, std::size_t line) {
    const std::string relation =
        internal::GetString(row, "relation", source, line);
    if (relation != category::kEntailment && relation != category::kNegation) {
      throw ParseError(std::string(source), line,
                       "unknown relation label '" + relation + "'");
    }
    SentencePair pair;
    pair.category = relation;
    pair.s_a = internal::GetString(row, "premise", source, line);
    pair.s_b = internal::GetString(row, "hypothesis", source, line);
    pair.label_a = "premise";
    pair.label_b = "hypothesis";
    if (row.contains("hypothesis_tokens")) {
      Json wrapped = {{"tokens", row.at("hypothesis_tokens")}};
      pair.annotation_b =
          ParseAnnotatedSentence(internal::Dump(wrapped), source, line);
    }
    if (pair.s_a == pair.s_b) {
      throw ParseError(std::string(source), line,
                       "premise and hypothesis are identical");
    }
    out.Add(std::move(pair));
  });
  return out.Take();
}

std::vector<SentencePair> IngestRelationPairs(
    const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadRelationPairs(in, path.string());
}

namespace {

AdaptationRule::Action ParseAction(std::string_view name) {
  if (name == "none") return AdaptationRule::Action::kNone;
  if (name == "replace_prefix") return AdaptationRule::Action::kReplacePrefix;
  if (name == "drop_prefix") return AdaptationRule::Action::kDropPrefix;
  throw InvalidArgument("unknown adaptation action '" + std::string(name) +
                        "'");
}

Template TemplateFromJson(const Json& j, std::string_view source) {
  Template t;
  t.category = internal::GetString(j, "category", source, 0);
  t.text = internal::GetString(j, "text", source, 0);
  t.side = j.contains("side") ? ParseTemplateSide(j.at("side").get<std::string>())
                              : TemplateSide::kBoth;
  if (j.contains("adaptation_rules")) {
    for (const Json& r : j.at("adaptation_rules")) {
      AdaptationRule rule;
      rule.condition =
          ParseSlotClass(internal::GetString(r, "condition", source, 0));
      rule.action = ParseAction(internal::GetString(r, "action", source, 0));
      if (rule.action == AdaptationRule::Action::kReplacePrefix) {
        rule.old_word = internal::GetString(r, "old", source, 0);
        rule.new_word = internal::GetString(r, "new", source, 0);
      } else if (rule.action == AdaptationRule::Action::kDropPrefix) {
        rule.old_word = internal::GetString(r, "word", source, 0);
      }
      t.adaptation_rules.push_back(std::move(rule));
    }
  }
  ValidateTemplate(t);
  return t;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Calls fn(fields, line_no) for each non-blank line not starting with one of
// `comment_chars`.
template <typename Fn>
void ForEachTsvLine(std::istream& in, std::string_view comment_chars, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (comment_chars.find(line.front()) != std::string_view::npos) continue;
    fn(SplitTabs(line), line_no);
  }
}

const char* ScopeName(CandidateScope scope) {
  return scope == CandidateScope::kExplicit ? "explicit" : "category-pool";
}

}  // namespace

std::vector<Template> ReadTemplates(std::istream& in, std::string_view source) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source), 0, e.what());
  }
  if (!doc.is_array()) {
    throw ParseError(std::string(source), 0, "expected a JSON array");
  }
  std::vector<Template> templates;
  try {
    for (const Json& j : doc) templates.push_back(TemplateFromJson(j, source));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(source), 0, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source), 0, e.what());
  }
  return templates;
}

std::vector<Template> LoadTemplates(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadTemplates(in, path.string());
}

std::vector<WordPair> ReadWordPairs(std::istream& in, std::string_view source,
                                    std::string_view category) {
  std::vector<WordPair> pairs;
  ForEachTsvLine(in, "#:", [&](const std::vector<std::string>& f,
                               std::size_t line) {
    if (f.size() != 4) {
      throw ParseError(std::string(source), line,
                       "expected 'w_a<TAB>w_b<TAB>label_a<TAB>label_b'");
    }
    if (f[0].empty() || f[1].empty()) {
      throw ParseError(std::string(source), line, "empty word");
    }
    if (f[0] == f[1]) {
      throw ParseError(std::string(source), line,
                       "word pair with identical words '" + f[0] + "'");
    }
    pairs.push_back({f[0], f[1], f[2], f[3], std::string(category)});
  });
  return pairs;
}

std::vector<WordPair> LoadWordPairs(const std::filesystem::path& path,
                                    std::string_view category) {
  auto in = internal::OpenInput(path);
  return ReadWordPairs(in, path.string(), category);
}

WordClassMap ReadWordClasses(std::istream& in, std::string_view source) {
  WordClassMap classes;
  ForEachTsvLine(in, "#", [&](const std::vector<std::string>& f,
                              std::size_t line) {
    if (f.size() != 2) {
      throw ParseError(std::string(source), line, "expected 'word<TAB>class'");
    }
    try {
      classes[ToLower(f[0])] = ParseSlotClass(f[1]);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string(source), line, e.what());
    }
  });
  return classes;
}

Lexicon ReadLexicon(std::istream& in, std::string_view source) {
  Lexicon lexicon;
  ForEachTsvLine(in, "#", [&](const std::vector<std::string>& f,
                              std::size_t line) {
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      throw ParseError(std::string(source), line, "expected 'key<TAB>value'");
    }
    lexicon[ToLower(f[0])] = f[1];
  });
  return lexicon;
}

Lexicon LoadLexicon(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadLexicon(in, path.string());
}

std::string ToJsonLine(const SentencePair& pair) {
  Json j = {{"id", pair.id},         {"category", pair.category},
            {"s_a", pair.s_a},       {"s_b", pair.s_b},
            {"slot_a", pair.slot_a}, {"slot_b", pair.slot_b},
            {"label_a", pair.label_a}, {"label_b", pair.label_b}};
  if (pair.annotation_b) {
    j["annotation_b"] = Json::parse(ToJsonLine(*pair.annotation_b));
  }
  return internal::Dump(j);
}

std::vector<SentencePair> ReadSentencePairs(std::istream& in,
                                            std::string_view source) {
  std::vector<SentencePair> pairs;
  internal::ForEachJsonLine(in, source, [&](const Json& j, std::size_t line) {
    SentencePair p;
    p.id = internal::GetString(j, "id", source, line);
    p.category = internal::GetString(j, "category", source, line);
    p.s_a = internal::GetString(j, "s_a", source, line);
    p.s_b = internal::GetString(j, "s_b", source, line);
    p.slot_a = internal::GetString(j, "slot_a", source, line);
    p.slot_b = internal::GetString(j, "slot_b", source, line);
    p.label_a = internal::GetString(j, "label_a", source, line);
    p.label_b = internal::GetString(j, "label_b", source, line);
    if (j.contains("annotation_b")) {
      p.annotation_b = ParseAnnotatedSentence(
          internal::Dump(j.at("annotation_b")), source, line);
    }
    if (p.s_a == p.s_b) {
      throw ParseError(std::string(source), line, "s_a equals s_b");
    }
    if (p.s_a.find(p.slot_a) == std::string::npos ||
        p.s_b.find(p.slot_b) == std::string::npos) {
      throw ParseError(std::string(source), line,
                       "slot word does not occur in its sentence");
    }
    pairs.push_back(std::move(p));
  });
  return pairs;
}

std::vector<SentencePair> LoadSentencePairs(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadSentencePairs(in, path.string());
}

void WriteSentencePairs(const std::vector<SentencePair>& pairs,
                        std::ostream& out) {
  for (const auto& p : pairs) out << ToJsonLine(p) << '\n';
}

std::string ToJsonLine(const AnalogyQuestion& q) {
  Json j = {{"qid", q.qid}, {"category", q.category}, {"a", q.a},
            {"b", q.b},     {"c", q.c},               {"gold_d", q.gold_d},
            {"candidate_scope", ScopeName(q.scope)}};
  if (q.scope == CandidateScope::kExplicit) j["candidates"] = q.candidates;
  j["exclusions"] = {q.a, q.b, q.c};
  return internal::Dump(j);
}

std::vector<AnalogyQuestion> ReadQuestions(std::istream& in,
                                           std::string_view source) {
  std::vector<AnalogyQuestion> questions;
  internal::ForEachJsonLine(in, source, [&](const Json& j, std::size_t line) {
    AnalogyQuestion q;
    q.qid = internal::GetString(j, "qid", source, line);
    q.category = internal::GetString(j, "category", source, line);
    q.a = internal::GetString(j, "a", source, line);
    q.b = internal::GetString(j, "b", source, line);
    q.c = internal::GetString(j, "c", source, line);
    q.gold_d = internal::GetString(j, "gold_d", source, line);
    const std::string scope =
        j.contains("candidate_scope")
            ? internal::GetString(j, "candidate_scope", source, line)
            : "category-pool";
    if (scope == "explicit") {
      q.scope = CandidateScope::kExplicit;
      q.candidates =
          internal::GetField(j, "candidates", source, line)
              .get<std::vector<std::string>>();
      if (q.candidates.empty()) {
        throw ParseError(std::string(source), line, "empty candidate list");
      }
    } else if (scope != "category-pool") {
      throw ParseError(std::string(source), line,
                       "unknown candidate_scope '" + scope + "'");
    }
    questions.push_back(std::move(q));
  });
  return questions;
}

std::vector<AnalogyQuestion> LoadQuestions(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadQuestions(in, path.string());
}

void WriteQuestions(const std::vector<AnalogyQuestion>& questions,
                    std::ostream& out) {
  std::string buf;
  for (const auto& q : questions) {
    buf += ToJsonLine(q);
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}


}  // namespace sentanalogy
