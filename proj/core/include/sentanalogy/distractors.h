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

#ifndef SENTANALOGY_DISTRACTORS_H_
#define SENTANALOGY_DISTRACTORS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sentanalogy/annotation.h"

namespace sentanalogy {

enum class DistractorKind {
  kNotNegation,
  kRandomDeletion,
  kRandomMasking,
  kSpanDeletion,
  kWordReordering,
};

inline constexpr DistractorKind kAllDistractorKinds[] = {
    DistractorKind::kNotNegation, DistractorKind::kRandomDeletion,
    DistractorKind::kRandomMasking, DistractorKind::kSpanDeletion,
    DistractorKind::kWordReordering};

std::string_view DistractorKindName(DistractorKind kind);
DistractorKind ParseDistractorKind(std::string_view name);

struct DistractorConfig {
  std::uint64_t seed = 0;
  double deletion_prob = 0.20;
  double mask_prob = 0.20;
  double span_lambda = 3.0;
  std::string mask_token = "[MASK]";
  // Spans removed per span-deletion distractor.
  int span_count = 1;
  // Also negate verbs coordinated with the one governed by the first
  // auxiliary ("is not singing and not playing").
  bool negate_conjuncts = false;
  // Resampling budget per kind when a draw collides with the positive or an
  // earlier distractor.
  int max_attempts = 32;
};

// Throws InvalidArgument unless probabilities lie in (0, 1), span_lambda > 0,
// span_count >= 1 and max_attempts >= 1.
void ValidateDistractorConfig(const DistractorConfig& config);

using Rng = std::mt19937_64;

// Independent stream for one (seed, question id, kind) triple. The stream
// does not depend on generation order or on other questions.
Rng MakeDistractorRng(std::uint64_t seed, std::string_view question_id,
                      DistractorKind kind);

// Per-position Bernoulli(p) draws; the sampling step of deletion and masking.
std::vector<bool> SampleBernoulliMask(std::size_t n, double p, Rng& rng);

// Raw Poisson(lambda) draw before clamping; the span-length sampler.
int SamplePoissonLength(double lambda, Rng& rng);

// Every transform works on the sentence body; a terminal punctuation token is
// held out and re-attached, so "." stays last. A transform returns nullopt
// when it is inapplicable to the sentence.

// Inserts "not" after the first auxiliary, or removes the first "not" when
// the sentence already has one. The result keeps a consistent annotation so
// the transform can be applied again.
std::optional<AnnotatedSentence> NotNegation(const AnnotatedSentence& sentence,
                                             bool negate_conjuncts = false);

// Deletes each token outside {ADJ, ADV, DET, AUX} with probability
// deletion_prob. Bodies shorter than 5 tokens lose at least one token; the
// body never becomes empty.
std::optional<std::vector<std::string>> RandomDeletion(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng);

// Replaces each token with mask_token with probability mask_prob, redrawing
// until at least one token is masked.
std::optional<std::vector<std::string>> RandomMasking(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng);

// Removes span_count contiguous spans whose lengths are Poisson(span_lambda)
// clamped to [1, N - 1]; span starts are uniform.
std::optional<std::vector<std::string>> SpanDeletion(
    const AnnotatedSentence& sentence, const DistractorConfig& config,
    Rng& rng);

// Picks a pivot in [1, N - 1] and returns body[pivot..] ++ body[..pivot].
// Pivots whose rotation reproduces the input are never chosen.
std::optional<std::vector<std::string>> WordReordering(
    const AnnotatedSentence& sentence, Rng& rng);

struct Distractor {
  DistractorKind kind;
  std::string text;

  friend bool operator==(const Distractor&, const Distractor&) = default;
};

struct CandidateSet {
  std::string question_id;
  // Sentence id (text) of the true candidate.
  std::string positive;
  std::vector<Distractor> distractors;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

// One distractor per applicable kind, in kAllDistractorKinds order. Draws
// that equal the positive or an earlier distractor are resampled up to
// max_attempts times, after which the kind is dropped and logged.
CandidateSet BuildCandidateSet(std::string_view positive_id,
                               const AnnotatedSentence& positive,
                               std::string_view question_id,
                               const DistractorConfig& config);

std::string ToJsonLine(const CandidateSet& set);
std::vector<CandidateSet> ReadCandidateSets(std::istream& in,
                                            std::string_view source);
std::vector<CandidateSet> LoadCandidateSets(const std::filesystem::path& path);

}  // namespace sentanalogy

#endif  // SENTANALOGY_DISTRACTORS_H_
