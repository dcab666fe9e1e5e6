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

#include "sentanalogy/annotation.h"

#include <fstream>
#include <istream>

#include "jsonl.h"
#include "sentanalogy/error.h"
#include "sentanalogy/text.h"

namespace sentanalogy {

using internal::Json;

std::vector<std::string> AnnotatedSentence::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(t.text);
  return words;
}

std::string AnnotatedSentence::Text() const { return Detokenize(Words()); }

bool IsRootLabel(std::string_view dep) {
  return dep == "ROOT" || dep == "root";
}

void ValidateAnnotatedSentence(const AnnotatedSentence& sentence) {
  if (sentence.tokens.empty()) {
    throw InvalidArgument("annotated sentence has no tokens");
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (t.head >= sentence.tokens.size()) {
      throw InvalidArgument("token " + std::to_string(i) +
                            " has out-of-range head " +
                            std::to_string(t.head));
    }
    if (IsRootLabel(t.dep)) ++roots;
  }
  if (roots != 1) {
    throw InvalidArgument("expected exactly one root token, found " +
                          std::to_string(roots));
  }
}

AnnotatedSentence ParseAnnotatedSentence(std::string_view json_line,
                                         std::string_view source,
                                         std::size_t line) {
  Json record;
  try {
    record = Json::parse(json_line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source), line, e.what());
  }
  AnnotatedSentence sentence;
  try {
    if (record.contains("id")) {
      const Json& id = record.at("id");
      sentence.id = id.is_string() ? id.get<std::string>() : id.dump();
    }
    const Json& tokens = internal::GetField(record, "tokens", source, line);
    if (!tokens.is_array()) {
      throw ParseError(std::string(source), line, "'tokens' must be an array");
    }
    for (const Json& t : tokens) {
      Token token;
      token.text = internal::GetString(t, "text", source, line);
      token.lemma = internal::GetString(t, "lemma", source, line);
      token.pos = internal::GetString(t, "pos", source, line);
      token.tag = internal::GetString(t, "tag", source, line);
      token.dep = internal::GetString(t, "dep", source, line);
      const Json& head = internal::GetField(t, "head", source, line);
      if (!head.is_number_integer() || head.get<long long>() < 0) {
        throw ParseError(std::string(source), line,
                         "'head' must be a non-negative integer");
      }
      token.head = head.get<std::size_t>();
      sentence.tokens.push_back(std::move(token));
    }
    ValidateAnnotatedSentence(sentence);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(source), line, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(source), line, e.what());
  }
  return sentence;
}

std::string ToJsonLine(const AnnotatedSentence& sentence) {
  Json record = Json::object();
  if (!sentence.id.empty()) record["id"] = sentence.id;
  Json tokens = Json::array();
  for (const auto& t : sentence.tokens) {
    tokens.push_back({{"text", t.text},
                      {"lemma", t.lemma},
                      {"pos", t.pos},
                      {"tag", t.tag},
                      {"dep", t.dep},
                      {"head", t.head}});
  }
  record["tokens"] = std::move(tokens);
  return internal::Dump(record);
}

std::vector<AnnotatedSentence> ReadAnnotatedCorpus(std::istream& in,
                                                   std::string_view source) {
  std::vector<AnnotatedSentence> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    corpus.push_back(ParseAnnotatedSentence(line, source, line_no));
  }
  return corpus;
}

std::vector<AnnotatedSentence> LoadAnnotatedCorpus(
    const std::filesystem::path& path) {
  auto in = internal::OpenInput(path);
  return ReadAnnotatedCorpus(in, path.string());
}

}  // namespace sentanalogy
