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

#ifndef SENTANALOGY_SRC_JSONL_H_
#define SENTANALOGY_SRC_JSONL_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <fstream>

#include "json.hpp"

namespace sentanalogy::internal {

using Json = nlohmann::ordered_json;

// Calls `fn(record, line_no)` for every non-blank, non-comment line. JSON
// syntax errors and exceptions from `fn` that are not ParseErrors are
// rethrown as ParseError carrying the line number.
void ForEachJsonLine(std::istream& in, std::string_view source,
                     const std::function<void(const Json&, std::size_t)>& fn);

std::ifstream OpenInput(const std::filesystem::path& path);
std::ofstream OpenOutput(const std::filesystem::path& path);

// Typed field access with a ParseError naming the field on failure.
std::string GetString(const Json& record, const char* field,
                      std::string_view source, std::size_t line);
const Json& GetField(const Json& record, const char* field,
                     std::string_view source, std::size_t line);

// Compact one-line serialization.
std::string Dump(const Json& record);

}  // namespace sentanalogy::internal

#endif  // SENTANALOGY_SRC_JSONL_H_
