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

#include "sentanalogy/embedding_store.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>
#include <utility>

#include "sentanalogy/error.h"
#include "sentanalogy/log.h"

namespace sentanalogy {
namespace {

constexpr int kPrintedDigits = 9;

// Splits on runs of `sep`, ignoring leading/trailing separators and '\r'.
std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == sep || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != sep && line[end] != '\r') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool ParseSize(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseFloat(std::string_view s, float& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

void AppendFloat(std::string& out, float value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, kPrintedDigits);
  out.append(buf, ptr);
}

void ParseComponents(std::span<const std::string_view> fields,
                     std::vector<float>& values, std::string_view source,
                     std::size_t line_no) {
  for (std::string_view f : fields) {
    float v;
    if (!ParseFloat(f, v)) {
      throw ParseError(std::string(source), line_no,
                       "invalid vector component '" + std::string(f) + "'");
    }
    values.push_back(v);
  }
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

double L2Norm(std::span<const float> v) { return std::sqrt(DotProduct(v, v)); }

double DotProduct(std::span<const float> a, std::span<const float> b) {
  double sum = 0.0;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    sum += static_cast<double>(a[k]) * static_cast<double>(b[k]);
  }
  return sum;
}

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InvalidArgument("embedding dimension must be positive");
}

EmbeddingTable::EmbeddingTable(std::size_t dim, std::vector<std::string> ids,
                               std::vector<float> values)
    : dim_(dim), ids_(std::move(ids)), values_(std::move(values)) {
  if (dim_ == 0) throw InvalidArgument("embedding dimension must be positive");
  if (values_.size() != ids_.size() * dim_) {
    throw InvalidArgument("expected " + std::to_string(ids_.size() * dim_) +
                          " components, got " +
                          std::to_string(values_.size()));
  }
  for (float v : values_) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("embedding component is not finite");
    }
  }
  BuildIndex();
  norms_.resize(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) norms_[i] = L2Norm(vector(i));
}

EmbeddingTable EmbeddingTable::FromRows(
    std::size_t dim, std::vector<std::string> ids,
    const std::vector<std::vector<double>>& rows) {
  if (rows.size() != ids.size()) {
    throw InvalidArgument("row count does not match id count");
  }
  std::vector<float> values;
  values.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw InvalidArgument("row has " + std::to_string(row.size()) +
                            " components, expected " + std::to_string(dim));
    }
    for (double v : row) values.push_back(static_cast<float>(v));
  }
  return EmbeddingTable(dim, std::move(ids), std::move(values));
}

void EmbeddingTable::BuildIndex() {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    auto [it, inserted] = index_.emplace(ids_[i], i);
    if (!inserted) throw InvalidArgument("duplicate id '" + ids_[i] + "'");
  }
}

std::span<const float> EmbeddingTable::vector(std::size_t i) const {
  if (i >= ids_.size()) throw std::out_of_range("embedding index");
  return {values_.data() + i * dim_, dim_};
}

std::optional<std::size_t> EmbeddingTable::Find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EmbeddingTable::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw UnknownItemError("unknown item '" + std::string(id) + "'");
  }
  return it->second;
}

double EmbeddingTable::Dot(std::size_t i, std::size_t j) const {
  return DotProduct(vector(i), vector(j));
}

double EmbeddingTable::Cosine(std::size_t i, std::size_t j) const {
  const double ni = norm(i);
  const double nj = norm(j);
  if (ni == 0.0 || nj == 0.0) {
    throw ZeroNormError("cosine undefined for zero-norm item '" +
                        (ni == 0.0 ? id(i) : id(j)) + "'");
  }
  return Dot(i, j) / (ni * nj);
}

bool operator==(const EmbeddingTable& a, const EmbeddingTable& b) {
  return a.dim_ == b.dim_ && a.ids_ == b.ids_ && a.values_ == b.values_ &&
         a.norms_ == b.norms_;
}

OovMode ParseOovMode(std::string_view name) {
  if (name == "error") return OovMode::kError;
  if (name == "skip" || name == "skip-token") return OovMode::kSkipToken;
  if (name == "zero" || name == "zero-vector") return OovMode::kZeroVector;
  throw InvalidArgument("unknown OOV mode '" + std::string(name) + "'");
}

EmbeddingTable ReadWordVectors(std::istream& in, std::string_view source,
                               std::optional<std::size_t> expected_dim) {
  if (expected_dim && *expected_dim == 0) {
    throw InvalidArgument("expected dimension must be positive");
  }
  std::optional<std::size_t> dim = expected_dim;
  std::optional<std::size_t> header_count;
  std::vector<std::string> ids;
  std::vector<float> values;
  std::string line;
  std::size_t line_no = 0;
  bool saw_content = false;

  while (std::getline(in, line)) {
    ++line_no;
    auto fields = SplitFields(line, ' ');
    if (fields.empty()) continue;
    if (!saw_content) {
      saw_content = true;
      std::size_t count = 0, header_dim = 0;
      if (fields.size() == 2 && ParseSize(fields[0], count) &&
          ParseSize(fields[1], header_dim)) {
        if (header_dim == 0) {
          throw ParseError(std::string(source), line_no,
                           "header declares zero dimension");
        }
        if (dim && *dim != header_dim) {
          throw ParseError(std::string(source), line_no,
                           "header dimension " + std::to_string(header_dim) +
                               " does not match expected " +
                               std::to_string(*dim));
        }
        dim = header_dim;
        header_count = count;
        ids.reserve(count);
        values.reserve(count * header_dim);
        continue;
      }
    }
    const std::size_t row_dim = fields.size() - 1;
    if (!dim) {
      if (row_dim == 0) {
        throw ParseError(std::string(source), line_no, "row has no components");
      }
      dim = row_dim;
    }
    if (row_dim != *dim) {
      throw ParseError(std::string(source), line_no,
                       "dimension mismatch: expected " + std::to_string(*dim) +
                           ", got " + std::to_string(row_dim));
    }
    ParseComponents(std::span(fields).subspan(1), values, source, line_no);
    ids.emplace_back(fields[0]);
  }
  if (!saw_content) throw ParseError(std::string(source), 0, "empty file");
  if (!dim) throw ParseError(std::string(source), 0, "no vectors");
  if (header_count && *header_count != ids.size()) {
    LogWarning(std::string(source) + ": header declares " +
               std::to_string(*header_count) + " vectors, read " +
               std::to_string(ids.size()));
  }
  try {
    return EmbeddingTable(*dim, std::move(ids), std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(source), 0, e.what());
  }
}

EmbeddingTable LoadWordVectors(const std::filesystem::path& path,
                               std::optional<std::size_t> expected_dim) {
  auto in = OpenForRead(path);
  return ReadWordVectors(in, path.string(), expected_dim);
}

void WriteWordVectors(const EmbeddingTable& table, std::ostream& out) {
  std::string buf;
  buf += std::to_string(table.size()) + ' ' + std::to_string(table.dim()) +
         '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    buf += table.id(i);
    for (float v : table.vector(i)) {
      buf += ' ';
      AppendFloat(buf, v);
    }
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

EmbeddingTable ReadSentenceEmbeddings(std::istream& in,
                                      std::string_view source) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0, dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = SplitFields(line, ' ');
    if (fields.empty()) continue;
    if (fields.size() != 2 || !ParseSize(fields[0], count) ||
        !ParseSize(fields[1], dim) || dim == 0) {
      throw ParseError(std::string(source), line_no,
                       "expected a 'count dim' header");
    }
    break;
  }
  if (dim == 0) throw ParseError(std::string(source), 0, "empty file");

  std::vector<std::string> ids;
  std::vector<float> values;
  ids.reserve(count);
  values.reserve(count * dim);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(std::string(source), line_no,
                       "expected 'id<TAB>components'");
    }
    std::string_view rest(line);
    rest.remove_prefix(tab + 1);
    auto fields = SplitFields(rest, ' ');
    if (fields.size() != dim) {
      throw ParseError(std::string(source), line_no,
                       "dimension mismatch: expected " + std::to_string(dim) +
                           ", got " + std::to_string(fields.size()));
    }
    ParseComponents(fields, values, source, line_no);
    ids.emplace_back(line.substr(0, tab));
    if (ids.size() > count) {
      throw ParseError(std::string(source), line_no,
                       "more rows than the header count " +
                           std::to_string(count));
    }
  }
  if (ids.size() != count) {
    throw ParseError(std::string(source), line_no,
                     "count mismatch: header declares " +
                         std::to_string(count) + ", read " +
                         std::to_string(ids.size()));
  }
  try {
    return EmbeddingTable(dim, std::move(ids), std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(source), 0, e.what());
  }
}

EmbeddingTable LoadSentenceEmbeddings(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  return ReadSentenceEmbeddings(in, path.string());
}

void WriteSentenceEmbeddings(const EmbeddingTable& table, std::ostream& out) {
  std::string buf;
  buf += std::to_string(table.size()) + ' ' + std::to_string(table.dim()) +
         '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.id(i).find_first_of("\t\n") != std::string::npos) {
      throw InvalidArgument("sentence id contains a tab or newline: '" +
                            table.id(i) + "'");
    }
    buf += table.id(i);
    buf += '\t';
    bool first = true;
    for (float v : table.vector(i)) {
      if (!first) buf += ' ';
      first = false;
      AppendFloat(buf, v);
    }
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

void SaveSentenceEmbeddings(const EmbeddingTable& table,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  WriteSentenceEmbeddings(table, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace sentanalogy
