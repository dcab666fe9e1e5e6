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

#ifndef SENTANALOGY_ENCODERS_H_
#define SENTANALOGY_ENCODERS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sentanalogy/embedding_store.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

struct TokenizedSentence {
  std::string id;
  std::vector<std::string> tokens;
};

struct DctConfig {
  // Highest coefficient index; the encoding has (max_coefficient + 1) * d
  // components.
  int max_coefficient = 0;
};

enum class EncoderMethod { kAverage, kSqrtSum, kDct };

// "avg", "sqrt-sum", "dct".
EncoderMethod ParseEncoderMethod(std::string_view name);

// Word vectors of the retained tokens in sentence order. Under kSkipToken OOV
// tokens are dropped; under kZeroVector they contribute a zero row; under
// kError the first OOV token raises OovError. Throws EmptySentenceError when
// no row is retained.
std::vector<std::vector<double>> LookupWordRows(
    const TokenizedSentence& sentence, const EmbeddingTable& words,
    const OovPolicy& policy);

// Component-wise mean of the retained word vectors.
std::vector<double> EncodeAverage(const TokenizedSentence& sentence,
                                  const EmbeddingTable& words,
                                  const OovPolicy& policy);

// Component-wise sum of the retained word vectors divided by sqrt(N).
std::vector<double> EncodeSqrtSum(const TokenizedSentence& sentence,
                                  const EmbeddingTable& words,
                                  const OovPolicy& policy);

// Orthonormal DCT-II over the word sequence, applied per embedding dimension:
//
//   c_0[j] = sqrt(1/N) * sum_n w_n[j]
//   c_k[j] = sqrt(2/N) * sum_n w_n[j] * cos(pi * (2n + 1) * k / (2N)),  k >= 1
//
// returning c_0 || c_1 || ... || c_K. Sequences shorter than K + 1 are
// zero-padded to K + 1 rows first, so N = max(rows, K + 1).
std::vector<double> DctCoefficients(
    const std::vector<std::vector<double>>& rows, std::size_t dim,
    const DctConfig& config);

std::vector<double> EncodeDct(const TokenizedSentence& sentence,
                              const EmbeddingTable& words,
                              const OovPolicy& policy, const DctConfig& config);

// Encodes every sentence with `method` into a table keyed by sentence id.
EmbeddingTable EncodeSentences(const std::vector<TokenizedSentence>& sentences,
                               const EmbeddingTable& words,
                               EncoderMethod method, const OovPolicy& policy,
                               const DctConfig& dct = {});

}  // namespace sentanalogy

#endif  // SENTANALOGY_ENCODERS_H_
