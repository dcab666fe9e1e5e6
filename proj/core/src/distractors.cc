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

#include "sentanalogy/distractors.h"

#include <algorithm>
#include <istream>
#include <utility>

#include "jsonl.h"
#include "sentanalogy/error.h"
#include "sentanalogy/log.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

using internal::Json;

namespace {

// Rejection loops below accept with probability >= p for every applicable
// input, so this bound is never reached in practice.
constexpr int kMaxRedraws = 100000;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Body tokens and the held-out terminal punctuation token, if any.
struct Body {
  std::vector<std::size_t> indices;
  std::optional<std::string> terminal;
};

Body SplitBody(const AnnotatedSentence& s) {
  Body body;
  std::size_t n = s.tokens.size();
  if (n >= 2 && IsPunctuationToken(s.tokens.back().text)) {
    body.terminal = s.tokens.back().text;
    --n;
  }
  for (std::size_t i = 0; i < n; ++i) body.indices.push_back(i);
  return body;
}

std::vector<std::string> Finish(std::vector<std::string> words,
                                const Body& body) {
  if (body.terminal) words.push_back(*body.terminal);
  return words;
}

bool IsProtectedPos(std::string_view pos) {
  return pos == "ADJ" || pos == "ADV" || pos == "DET" || pos == "AUX";
}

bool IsNot(const Token& t) { return ToLower(t.text) == "not"; }

AnnotatedSentence RemoveToken(const AnnotatedSentence& s, std::size_t at) {
  AnnotatedSentence out;
  out.id = s.id;
  const std::size_t removed_head = s.tokens[at].head;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i == at) continue;
    Token t = s.tokens[i];
    if (t.head == at) t.head = removed_head;
    if (t.head > at) --t.head;
    out.tokens.push_back(std::move(t));
  }
  return out;
}

// Inserts `token` so that it ends up at index `at`.
AnnotatedSentence InsertToken(const AnnotatedSentence& s, std::size_t at,
                              Token token) {
  AnnotatedSentence out;
  out.id = s.id;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i == at) out.tokens.push_back(token);
    Token t = s.tokens[i];
    if (t.head >= at) ++t.head;
    out.tokens.push_back(std::move(t));
  }
  if (at == s.tokens.size()) out.tokens.push_back(std::move(token));
  return out;
}

Token NotToken(std::size_t head) {
  return {.text = "not", .lemma = "not", .pos = "PART", .tag = "RB",
          .dep = "neg", .head = head};
}

}  // namespace

std::string_view DistractorKindName(DistractorKind kind) {
  switch (kind) {
    case DistractorKind::kNotNegation:
      return "not_negation";
    case DistractorKind::kRandomDeletion:
      return "random_deletion";
    case DistractorKind::kRandomMasking:
      return "random_masking";
    case DistractorKind::kSpanDeletion:
      return "span_deletion";
    case DistractorKind::kWordReordering:
      return "word_reordering";
  }
  return "unknown";
}

DistractorKind ParseDistractorKind(std::string_view name) {
  for (DistractorKind kind : kAllDistractorKinds) {
    if (DistractorKindName(kind) == name) return kind;
  }
  throw InvalidArgument("unknown distractor kind '" + std::string(name) + "'");
}

void ValidateDistractorConfig(const DistractorConfig& c) {
  auto in_unit = [](double p) { return p > 0.0 && p < 1.0; };
  if (!in_unit(c.deletion_prob) || !in_unit(c.mask_prob)) {
    throw InvalidArgument("distractor probabilities must lie in (0, 1)");
  }
  if (!(c.span_lambda > 0.0)) {
    throw InvalidArgument("span_lambda must be positive");
  }
  if (c.span_count < 1) throw InvalidArgument("span_count must be >= 1");
  if (c.max_attempts < 1) throw InvalidArgument("max_attempts must be >= 1");
}

Rng MakeDistractorRng(std::uint64_t seed, std::string_view question_id,
                      DistractorKind kind) {
  std::uint64_t state = SplitMix64(seed);
  state = SplitMix64(state ^ Fnv1a64(question_id));
  state = SplitMix64(state ^ (static_cast<std::uint64_t>(kind) + 1));
  return Rng(state);
}

std::vector<bool> SampleBernoulliMask(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution draw(p);
  std::vector<bool> mask(n);
  for (std::size_t i = 0; i < n; ++i) mask[i] = draw(rng);
  return mask;
}

int SamplePoissonLength(double lambda, Rng& rng) {
  std::poisson_distribution<int> draw(lambda);
  return draw(rng);
}

std::optional<AnnotatedSentence> NotNegation(const AnnotatedSentence& sentence,
                                             bool negate_conjuncts) {
  const auto& toks = sentence.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!IsNot(toks[i])) continue;
    std::vector<std::size_t> remove = {i};
    if (negate_conjuncts) {
      // Mirror of insertion: also drop "not" on verbs coordinated with the
      // negated one.
      const std::size_t verb = toks[i].head;
      for (std::size_t j = i + 1; j < toks.size(); ++j) {
        if (!IsNot(toks[j])) continue;
        const std::size_t h = toks[j].head;
        if (h != verb && toks[h].dep == "conj" && toks[h].head == verb) {
          remove.push_back(j);
        }
      }
    }
    AnnotatedSentence out = sentence;
    for (auto it = remove.rbegin(); it != remove.rend(); ++it) {
      out = RemoveToken(out, *it);
    }
    return out;
  }
  std::size_t aux = toks.size();
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].pos == "AUX" || toks[i].tag == "MD") {
      aux = i;
      break;
    }
  }
  if (aux == toks.size()) return std::nullopt;

  // The auxiliary attaches to the verb it supports; that verb governs "not".
  const std::size_t verb = toks[aux].head == aux ? aux : toks[aux].head;
  std::vector<std::size_t> conjuncts;
  if (negate_conjuncts) {
    for (std::size_t i = aux + 1; i < toks.size(); ++i) {
      if (toks[i].dep == "conj" && toks[i].head == verb &&
          (toks[i].pos == "VERB" || toks[i].pos == "AUX")) {
        conjuncts.push_back(i);
      }
    }
  }
  AnnotatedSentence out = sentence;
  std::size_t verb_now = verb;
  // Insert right-to-left so earlier positions stay valid.
  for (auto it = conjuncts.rbegin(); it != conjuncts.rend(); ++it) {
    out = InsertToken(out, *it, NotToken(*it + 1));
    if (verb_now >= *it) ++verb_now;
  }
  if (verb_now > aux) ++verb_now;
  out = InsertToken(out, aux + 1, NotToken(verb_now));
  return out;
}

std::optional<std::vector<std::string>> RandomDeletion(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng) {
  const Body body = SplitBody(sentence);
  const std::size_t n = body.indices.size();
  std::vector<std::size_t> deletable;
  for (std::size_t i : body.indices) {
    if (!IsProtectedPos(sentence.tokens[i].pos)) deletable.push_back(i);
  }
  if (deletable.empty() || n < 2) return std::nullopt;

  for (int redraw = 0; redraw < kMaxRedraws; ++redraw) {
    auto mask = SampleBernoulliMask(deletable.size(), config.deletion_prob, rng);
    const auto deleted =
        static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
    if (deleted == n) continue;
    if (n < 5 && deleted == 0) continue;
    std::vector<bool> drop(sentence.tokens.size(), false);
    for (std::size_t k = 0; k < deletable.size(); ++k) {
      if (mask[k]) drop[deletable[k]] = true;
    }
    std::vector<std::string> words;
    for (std::size_t i : body.indices) {
      if (!drop[i]) words.push_back(sentence.tokens[i].text);
    }
    return Finish(std::move(words), body);
  }
  throw Error("random deletion did not converge");
}

std::optional<std::vector<std::string>> RandomMasking(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng) {
  const Body body = SplitBody(sentence);
  const std::size_t n = body.indices.size();
  if (n == 0) return std::nullopt;
  for (int redraw = 0; redraw < kMaxRedraws; ++redraw) {
    auto mask = SampleBernoulliMask(n, config.mask_prob, rng);
    if (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; })) {
      continue;
    }
    std::vector<std::string> words;
    for (std::size_t k = 0; k < n; ++k) {
      words.push_back(mask[k] ? config.mask_token
                              : sentence.tokens[body.indices[k]].text);
    }
    return Finish(std::move(words), body);
  }
  throw Error("random masking did not converge");
}

std::optional<std::vector<std::string>> SpanDeletion(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng) {
  const Body body = SplitBody(sentence);
  if (body.indices.size() < 2) return std::nullopt;
  std::vector<std::string> words;
  for (std::size_t i : body.indices) words.push_back(sentence.tokens[i].text);
  for (int span = 0; span < config.span_count && words.size() >= 2; ++span) {
    const std::size_t n = words.size();
    const auto raw =
        static_cast<std::size_t>(SamplePoissonLength(config.span_lambda, rng));
    const std::size_t len = std::clamp<std::size_t>(raw, 1, n - 1);
    std::uniform_int_distribution<std::size_t> start_dist(0, n - len);
    const std::size_t start = start_dist(rng);
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(start),
                words.begin() + static_cast<std::ptrdiff_t>(start + len));
  }
  return Finish(std::move(words), body);
}

std::optional<std::vector<std::string>> WordReordering(
    const AnnotatedSentence& sentence, Rng& rng) {
  const Body body = SplitBody(sentence);
  const std::size_t n = body.indices.size();
  if (n < 2) return std::nullopt;
  std::vector<std::string> words;
  for (std::size_t i : body.indices) words.push_back(sentence.tokens[i].text);

  std::vector<std::size_t> pivots;
  for (std::size_t p = 1; p < n; ++p) {
    std::vector<std::string> rotated = words;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(p),
                rotated.end());
    if (rotated != words) pivots.push_back(p);
  }
  if (pivots.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pivots.size() - 1);
  const std::size_t pivot = pivots[pick(rng)];
  std::rotate(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(pivot),
              words.end());
  return Finish(std::move(words), body);
}

CandidateSet BuildCandidateSet(std::string_view positive_id,
                               const AnnotatedSentence& positive,
                               std::string_view question_id,
                               const DistractorConfig& config) {
  ValidateDistractorConfig(config);
  CandidateSet set;
  set.question_id = std::string(question_id);
  set.positive = std::string(positive_id);
  const std::string positive_text = positive.Text();

  auto is_new = [&](const std::string& text) {
    if (text == set.positive || text == positive_text) return false;
    return std::none_of(set.distractors.begin(), set.distractors.end(),
                        [&](const Distractor& d) { return d.text == text; });
  };

  for (DistractorKind kind : kAllDistractorKinds) {
    Rng rng = MakeDistractorRng(config.seed, question_id, kind);
    std::optional<std::string> accepted;
    bool applicable = true;
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
      std::optional<std::vector<std::string>> words;
      switch (kind) {
        case DistractorKind::kNotNegation:
          if (auto s = NotNegation(positive, config.negate_conjuncts)) {
            words = s->Words();
          }
          break;
        case DistractorKind::kRandomDeletion:
          words = RandomDeletion(positive, config, rng);
          break;
        case DistractorKind::kRandomMasking:
          words = RandomMasking(positive, config, rng);
          break;
        case DistractorKind::kSpanDeletion:
          words = SpanDeletion(positive, config, rng);
          break;
        case DistractorKind::kWordReordering:
          words = WordReordering(positive, rng);
          break;
      }
      if (!words) {
        applicable = false;
        break;
      }
      std::string text = Detokenize(*words);
      if (is_new(text)) {
        accepted = std::move(text);
        break;
      }
      // Deterministic transform: another attempt gives the same text.
      if (kind == DistractorKind::kNotNegation) break;
    }
    if (accepted) {
      set.distractors.push_back({kind, std::move(*accepted)});
    } else {
      LogInfo("candidate set " + set.question_id + ": " +
              std::string(DistractorKindName(kind)) +
              (applicable ? " dropped after colliding draws"
                          : " inapplicable"));
    }
  }
  return set;
}

std::string ToJsonLine(const CandidateSet& set) {
  Json distractors = Json::array();
  for (const auto& d : set.distractors) {
    distractors.push_back(
        {{"kind", std::string(DistractorKindName(d.kind))}, {"text", d.text}});
  }
  Json j = {{"qid", set.question_id},
            {"positive", set.positive},
            {"distractors", std::move(distractors)}};
  return internal::Dump(j);
}

std::vector<CandidateSet> ReadCandidateSets(std::istream& in,
                                            std::string_view source) {
  std::vector<CandidateSet> sets;
  internal::ForEachJsonLine(in, source, [&](const Json& j, std::size_t line) {
    CandidateSet set;
    set.question_id = internal::GetString(j, "qid", source, line);
    set.positive = internal::GetString(j, "positive", source, line);
    const Json& ds = internal::GetField(j, "distractors", source, line);
    for (const Json& d : ds) {
      set.distractors.push_back(
          {ParseDistractorKind(internal::GetString(d, "kind", source, line)),
           internal::GetString(d, "text", source, line)});
    }
    sets.push_back(std::move(set));
  });
  return sets;
}

std::vector<CandidateSet> LoadCandidateSets(const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadCandidateSets(in, path.string());
}

}  // namespace sentanalogy
