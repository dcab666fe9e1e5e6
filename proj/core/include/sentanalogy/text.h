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

#ifndef SENTANALOGY_TEXT_H_
#define SENTANALOGY_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace sentanalogy {

struct TokenizerOptions {
  bool lowercase = true;
  // Split trailing . , ! ? off each whitespace token.
  bool split_punctuation = true;
};

// Whitespace tokenizer used by the sentence encoders.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options = {});

// ASCII lowercasing; non-ASCII bytes pass through unchanged.
std::string ToLower(std::string_view s);

bool IsPunctuationToken(std::string_view token);

// Joins tokens with single spaces, without a space before punctuation and
// clitics ('s, n't, 're, ...).
std::string Detokenize(const std::vector<std::string>& tokens);

// Upper-cases the first ASCII letter of `s`.
std::string CapitalizeFirst(std::string_view s);

}  // namespace sentanalogy

#endif  // SENTANALOGY_TEXT_H_
