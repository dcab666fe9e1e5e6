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

#include "sentanalogy/encoders.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "sentanalogy/error.h"
#include "sentanalogy/log.h"

namespace sentanalogy {

EncoderMethod ParseEncoderMethod(std::string_view name) {
  if (name == "avg" || name == "average") return EncoderMethod::kAverage;
  if (name == "sqrt-sum") return EncoderMethod::kSqrtSum;
  if (name == "dct") return EncoderMethod::kDct;
  throw InvalidArgument("unknown encoder method '" + std::string(name) + "'");
}

std::vector<std::vector<double>> LookupWordRows(
    const TokenizedSentence& sentence, const EmbeddingTable& words,
    const OovPolicy& policy) {
  std::vector<std::vector<double>> rows;
  rows.reserve(sentence.tokens.size());
  for (const auto& token : sentence.tokens) {
    auto index = words.Find(token);
    if (!index) {
      if (policy.report) {
        LogWarning("sentence '" + sentence.id + "': OOV token '" + token + "'");
      }
      switch (policy.mode) {
        case OovMode::kError:
          throw OovError(token);
        case OovMode::kSkipToken:
          continue;
        case OovMode::kZeroVector:
          rows.emplace_back(words.dim(), 0.0);
          continue;
      }
    }
    auto v = words.vector(*index);
    rows.emplace_back(v.begin(), v.end());
  }
  if (rows.empty()) {
    throw EmptySentenceError("sentence '" + sentence.id +
                             "' has no in-vocabulary tokens");
  }
  return rows;
}

namespace {

std::vector<double> SumRows(const std::vector<std::vector<double>>& rows,
                            std::size_t dim) {
  std::vector<double> sum(dim, 0.0);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < dim; ++j) sum[j] += row[j];
  }
  return sum;
}

}  // namespace

std::vector<double> EncodeAverage(const TokenizedSentence& sentence,
                                  const EmbeddingTable& words,
                                  const OovPolicy& policy) {
  auto rows = LookupWordRows(sentence, words, policy);
  auto out = SumRows(rows, words.dim());
  const double n = static_cast<double>(rows.size());
  for (double& v : out) v /= n;
  return out;
}

std::vector<double> EncodeSqrtSum(const TokenizedSentence& sentence,
                                  const EmbeddingTable& words,
                                  const OovPolicy& policy) {
  auto rows = LookupWordRows(sentence, words, policy);
  auto out = SumRows(rows, words.dim());
  const double scale = std::sqrt(static_cast<double>(rows.size()));
  for (double& v : out) v /= scale;
  return out;
}

std::vector<double> DctCoefficients(
    const std::vector<std::vector<double>>& rows, std::size_t dim,
    const DctConfig& config) {
  if (config.max_coefficient < 0) {
    throw InvalidArgument("DCT coefficient index must be non-negative");
  }
  if (rows.empty()) throw EmptySentenceError("DCT of an empty sequence");
  const std::size_t num_coeffs =
      static_cast<std::size_t>(config.max_coefficient) + 1;
  // Zero rows beyond rows.size() contribute nothing to the sums; only the
  // transform length changes.
  const std::size_t n = std::max(rows.size(), num_coeffs);
  const double len = static_cast<double>(n);

  std::vector<double> out(num_coeffs * dim, 0.0);
  for (std::size_t k = 0; k < num_coeffs; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / len);
    double* coeff = out.data() + k * dim;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (rows[t].size() != dim) {
        throw InvalidArgument("word row has wrong dimensionality");
      }
      const double basis =
          k == 0 ? 1.0
                 : std::cos(std::numbers::pi * (2.0 * static_cast<double>(t) +
                                                1.0) *
                            static_cast<double>(k) / (2.0 * len));
      for (std::size_t j = 0; j < dim; ++j) coeff[j] += rows[t][j] * basis;
    }
    for (std::size_t j = 0; j < dim; ++j) coeff[j] *= scale;
  }
  return out;
}

std::vector<double> EncodeDct(const TokenizedSentence& sentence,
                              const EmbeddingTable& words,
                              const OovPolicy& policy,
                              const DctConfig& config) {
  return DctCoefficients(LookupWordRows(sentence, words, policy), words.dim(),
                         config);
}

EmbeddingTable EncodeSentences(const std::vector<TokenizedSentence>& sentences,
                               const EmbeddingTable& words,
                               EncoderMethod method, const OovPolicy& policy,
                               const DctConfig& dct) {
  const std::size_t out_dim =
      method == EncoderMethod::kDct
          ? words.dim() * (static_cast<std::size_t>(dct.max_coefficient) + 1)
          : words.dim();
  std::vector<std::string> ids;
  std::vector<float> values;
  ids.reserve(sentences.size());
  values.reserve(sentences.size() * out_dim);
  for (const auto& sentence : sentences) {
    std::vector<double> v;
    switch (method) {
      case EncoderMethod::kAverage:
        v = EncodeAverage(sentence, words, policy);
        break;
      case EncoderMethod::kSqrtSum:
        v = EncodeSqrtSum(sentence, words, policy);
        break;
      case EncoderMethod::kDct:
        v = EncodeDct(sentence, words, policy, dct);
        break;
    }
    ids.push_back(sentence.id);
    for (double x : v) values.push_back(static_cast<float>(x));
  }
  return EmbeddingTable(out_dim, std::move(ids), std::move(values));
}

}  // namespace sentanalogy
