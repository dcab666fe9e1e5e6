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

#ifndef SENTANALOGY_ANNOTATION_H_
#define SENTANALOGY_ANNOTATION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sentanalogy {

// One token of a tagged and dependency-parsed sentence. `pos` is the coarse
// universal tag (NOUN, AUX, ...), `tag` the fine Penn tag (NNS, JJR, ...).
// `head` is a 0-based index into the same sentence; the root points at
// itself.
struct Token {
  std::string text;
  std::string lemma;
  std::string pos;
  std::string tag;
  std::string dep;
  std::size_t head = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct AnnotatedSentence {
  std::string id;  // optional
  std::vector<Token> tokens;

  std::vector<std::string> Words() const;
  // Detokenized surface text.
  std::string Text() const;

  friend bool operator==(const AnnotatedSentence&,
                         const AnnotatedSentence&) = default;
};

bool IsRootLabel(std::string_view dep);

// Checks head ranges and the single-root rule. Throws InvalidArgument.
void ValidateAnnotatedSentence(const AnnotatedSentence& sentence);

// One JSONL record: {"id"?, "tokens":[{"text","lemma","pos","tag","dep",
// "head"}...]}. Throws ParseError on malformed JSON or a schema violation.
AnnotatedSentence ParseAnnotatedSentence(std::string_view json_line,
                                         std::string_view source = "<input>",
                                         std::size_t line = 0);
std::string ToJsonLine(const AnnotatedSentence& sentence);

// Reads a whole corpus. Blank lines and lines starting with '#' are skipped.
std::vector<AnnotatedSentence> ReadAnnotatedCorpus(std::istream& in,
                                                   std::string_view source);
std::vector<AnnotatedSentence> LoadAnnotatedCorpus(
    const std::filesystem::path& path);

}  // namespace sentanalogy

#endif  // SENTANALOGY_ANNOTATION_H_
