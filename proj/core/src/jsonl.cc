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

#include "jsonl.h"

#include <fstream>
#include <istream>

#include "sentanalogy/error.h"

namespace sentanalogy::internal {

void ForEachJsonLine(std::istream& in, std::string_view source,
                     const std::function<void(const Json&, std::size_t)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(source), line_no, e.what());
    }
    try {
      fn(record, line_no);
    } catch (const ParseError&) {
      throw;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(source), line_no, e.what());
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string(source), line_no, e.what());
    }
  }
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

const Json& GetField(const Json& record, const char* field,
                     std::string_view source, std::size_t line) {
  if (!record.is_object() || !record.contains(field)) {
    throw ParseError(std::string(source), line,
                     std::string("missing field '") + field + "'");
  }
  return record.at(field);
}

std::string GetString(const Json& record, const char* field,
                      std::string_view source, std::size_t line) {
  const Json& value = GetField(record, field, source, line);
  if (!value.is_string()) {
    throw ParseError(std::string(source), line,
                     std::string("field '") + field + "' must be a string");
  }
  return value.get<std::string>();
}

std::string Dump(const Json& record) {
  return record.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace sentanalogy::internal
