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

#include "sentanalogy/pipeline.h"

#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "jsonl.h"
#include "sentanalogy/error.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

using internal::Json;

std::vector<std::string> CollectSentenceTexts(
    const std::vector<SentencePair>& pairs,
    const std::vector<CandidateSet>& sets) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& text) {
    if (seen.insert(text).second) out.push_back(text);
  };
  for (const auto& p : pairs) {
    add(p.s_a);
    add(p.s_b);
  }
  for (const auto& s : sets) {
    add(s.positive);
    for (const auto& d : s.distractors) add(d.text);
  }
  return out;
}

std::vector<TokenizedSentence> TokenizeTexts(
    const std::vector<std::string>& texts, const TokenizerOptions& options) {
  std::vector<TokenizedSentence> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back({t, Tokenize(t, options)});
  return out;
}

std::vector<TokenizedSentence> LoadSentencesForEncoding(
    const std::filesystem::path& path, const TokenizerOptions& options) {
  const std::string source = path.string();
  auto in = internal::OpenInput(path);
  std::vector<std::pair<std::string, std::string>> items;  // (id, text)
  internal::ForEachJsonLine(in, source, [&](const Json& j, std::size_t line) {
    if (j.contains("s_a")) {
      const std::string a = internal::GetString(j, "s_a", source, line);
      items.emplace_back(a, a);
      const std::string b = internal::GetString(j, "s_b", source, line);
      items.emplace_back(b, b);
    } else if (j.contains("positive")) {
      const std::string p = internal::GetString(j, "positive", source, line);
      items.emplace_back(p, p);
      for (const Json& d : internal::GetField(j, "distractors", source, line)) {
        const std::string t = internal::GetString(d, "text", source, line);
        items.emplace_back(t, t);
      }
    } else {
      const std::string text = internal::GetString(j, "text", source, line);
      const std::string id =
          j.contains("id") ? internal::GetString(j, "id", source, line) : text;
      items.emplace_back(id, text);
    }
  });
  std::vector<TokenizedSentence> out;
  std::unordered_set<std::string> seen;
  for (auto& [id, text] : items) {
    if (!seen.insert(id).second) continue;
    out.push_back({id, Tokenize(text, options)});
  }
  return out;
}

std::vector<CandidateSet> BuildQuestionCandidateSets(
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<SentencePair>& pairs, const DistractorConfig& config) {
  std::unordered_map<std::string_view, const AnnotatedSentence*> parses;
  for (const auto& p : pairs) {
    if (p.annotation_b) parses.try_emplace(p.s_b, &*p.annotation_b);
  }
  std::vector<CandidateSet> out;
  out.reserve(questions.size());
  for (const auto& q : questions) {
    auto it = parses.find(q.gold_d);
    if (it == parses.end()) {
      throw InvalidArgument("question " + q.qid +
                            ": gold sentence has no annotation");
    }
    out.push_back(BuildCandidateSet(q.gold_d, *it->second, q.qid, config));
  }
  return out;
}

std::vector<CandidateSet> BuildPairCandidateSets(
    const std::vector<SentencePair>& pairs, const DistractorConfig& config) {
  std::vector<CandidateSet> out;
  for (const auto& p : pairs) {
    if (!p.annotation_b) continue;
    out.push_back(BuildCandidateSet(p.s_b, *p.annotation_b, p.id, config));
  }
  return out;
}

std::vector<AnalogyQuestion> AttachCandidateSets(
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<CandidateSet>& sets) {
  std::unordered_map<std::string_view, const CandidateSet*> by_qid;
  for (const auto& s : sets) by_qid.try_emplace(s.question_id, &s);
  std::vector<AnalogyQuestion> out;
  out.reserve(questions.size());
  for (const auto& q : questions) {
    auto it = by_qid.find(q.qid);
    if (it == by_qid.end()) {
      throw UnknownItemError("no candidate set for question '" + q.qid + "'");
    }
    AnalogyQuestion copy = q;
    copy.scope = CandidateScope::kExplicit;
    copy.candidates.clear();
    copy.candidates.push_back(it->second->positive);
    for (const auto& d : it->second->distractors) {
      copy.candidates.push_back(d.text);
    }
    out.push_back(std::move(copy));
  }
  return out;
}

}  // namespace sentanalogy
