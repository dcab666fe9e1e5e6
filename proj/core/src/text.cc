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

#include "sentanalogy/text.h"

#include <algorithm>
#include <cctype>

namespace sentanalogy {
namespace {

bool IsTerminalPunct(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?';
}

bool AttachesLeft(std::string_view token) {
  if (IsPunctuationToken(token)) return true;
  if (token.empty()) return false;
  if (token.front() == '\'') return true;
  std::string lower = ToLower(token);
  return lower == "n't";
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' ||
           c == ':' || c == ')';
  });
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerOptions& options) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view word = text.substr(pos, end - pos);
    pos = end;

    std::vector<std::string> trailing;
    if (options.split_punctuation) {
      while (word.size() > 1 && IsTerminalPunct(word.back())) {
        trailing.emplace_back(1, word.back());
        word.remove_suffix(1);
      }
    }
    tokens.push_back(options.lowercase ? ToLower(word) : std::string(word));
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return tokens;
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && !AttachesLeft(t)) out += ' ';
    out += t;
  }
  return out;
}

std::string CapitalizeFirst(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
  }
  return out;
}

}  // namespace sentanalogy
