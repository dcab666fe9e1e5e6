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

#ifndef SENTANALOGY_PIPELINE_H_
#define SENTANALOGY_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "sentanalogy/datagen.h"
#include "sentanalogy/distractors.h"
#include "sentanalogy/encoders.h"

namespace sentanalogy {

// Distinct sentence texts of `pairs` (S_A before S_B, pair order), followed
// by the positives and distractor texts of `sets` not seen before.
std::vector<std::string> CollectSentenceTexts(
    const std::vector<SentencePair>& pairs,
    const std::vector<CandidateSet>& sets = {});

// Tokenized sentences keyed by their text.
std::vector<TokenizedSentence> TokenizeTexts(
    const std::vector<std::string>& texts,
    const TokenizerOptions& options = {});

// Sentences from a JSONL file whose lines are sentence pairs (s_a, s_b),
// candidate sets (positive, distractors) or plain {"id"?, "text"} records,
// deduplicated by id in order of first appearance.
std::vector<TokenizedSentence> LoadSentencesForEncoding(
    const std::filesystem::path& path, const TokenizerOptions& options = {});

// One candidate set per question, built from the parse of the gold sentence
// (the annotated S_B of the pair it comes from) and keyed by the question id.
// Throws InvalidArgument when the gold sentence has no annotation.
std::vector<CandidateSet> BuildQuestionCandidateSets(
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<SentencePair>& pairs, const DistractorConfig& config);

// One candidate set per pair with an annotated S_B, keyed by the pair id.
std::vector<CandidateSet> BuildPairCandidateSets(
    const std::vector<SentencePair>& pairs, const DistractorConfig& config);

// Copies of `questions` restricted to explicit candidates: the positive of
// the matching set followed by its distractors. Throws UnknownItemError for
// a question without a set.
std::vector<AnalogyQuestion> AttachCandidateSets(
    const std::vector<AnalogyQuestion>& questions,
    const std::vector<CandidateSet>& sets);

}  // namespace sentanalogy

#endif  // SENTANALOGY_PIPELINE_H_
